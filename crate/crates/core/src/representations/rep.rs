use super::{adjoint, AdjointMatrix, SL2Matrix, TorusRepParams, TwistRepParams};
use crate::word_calculus::{KnotPresentation, Word};
use crate::{Error, Result};

/// Maximum `||rho(r) - I||` (max entry) accepted for a relator `r`.
pub const RELATION_TOL: f64 = 1e-8;

/// Where a representation came from.
#[derive(Clone, Debug, PartialEq)]
pub enum RepKind {
    Torus(TorusRepParams),
    Twist(TwistRepParams),
    Custom,
}

/// A representation `rho: G_K -> SL(2, C)` given on the generators of a
/// presentation, together with `Ad o rho`.
///
/// Construction verifies every relator, so a value of this type always
/// satisfies the group relations to [`RELATION_TOL`].
#[derive(Clone, Debug)]
pub struct Representation {
    presentation: KnotPresentation,
    images: Vec<SL2Matrix>,
    adjoint_images: Vec<AdjointMatrix>,
    adjoint_inverses: Vec<AdjointMatrix>,
    kind: RepKind,
}

impl Representation {
    pub fn new(presentation: KnotPresentation, images: Vec<SL2Matrix>) -> Result<Self> {
        Self::with_kind(presentation, images, RepKind::Custom)
    }

    pub(crate) fn with_kind(
        presentation: KnotPresentation,
        images: Vec<SL2Matrix>,
        kind: RepKind,
    ) -> Result<Self> {
        if images.len() != presentation.num_generators() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                images.len(),
                presentation.num_generators()
            )));
        }
        let adjoint_images = images.iter().map(adjoint).collect::<Result<Vec<_>>>()?;
        let adjoint_inverses = images
            .iter()
            .map(|g| adjoint(&g.inverse()))
            .collect::<Result<Vec<_>>>()?;
        let rep = Representation { presentation, images, adjoint_images, adjoint_inverses, kind };
        for (i, r) in rep.presentation.relators().iter().enumerate() {
            let residual = rep.holonomy(r).distance(&SL2Matrix::identity());
            if residual.is_nan() || residual > RELATION_TOL {
                return Err(Error::RelationViolated { relator: i, residual });
            }
        }
        Ok(rep)
    }

    pub fn presentation(&self) -> &KnotPresentation {
        &self.presentation
    }

    pub fn images(&self) -> &[SL2Matrix] {
        &self.images
    }

    pub fn adjoint_images(&self) -> &[AdjointMatrix] {
        &self.adjoint_images
    }

    pub fn kind(&self) -> &RepKind {
        &self.kind
    }

    /// `rho(u)`.
    pub fn holonomy(&self, u: &Word) -> SL2Matrix {
        u.letters().iter().fold(SL2Matrix::identity(), |acc, &(g, e)| acc * self.images[g].pow(e))
    }

    /// `(Ad o rho)(u)`.
    pub fn adjoint_holonomy(&self, u: &Word) -> AdjointMatrix {
        u.letters().iter().fold(AdjointMatrix::identity(), |acc, &(g, e)| {
            let base = if e < 0 { self.adjoint_inverses[g] } else { self.adjoint_images[g] };
            (0..e.unsigned_abs()).fold(acc, |m, _| m * base)
        })
    }

    /// Largest `||rho(r) - I||` over the relators.
    pub fn relation_residual(&self) -> f64 {
        self.presentation
            .relators()
            .iter()
            .map(|r| self.holonomy(r).distance(&SL2Matrix::identity()))
            .fold(0.0, f64::max)
    }

    /// The conjugate representation `g rho g^-1`.
    pub fn conjugate(&self, g: &SL2Matrix) -> Result<Self> {
        let ginv = g.inverse();
        let images = self.images.iter().map(|x| *g * *x * ginv).collect();
        Self::with_kind(self.presentation.clone(), images, self.kind.clone())
    }
}
