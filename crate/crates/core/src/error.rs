use thiserror::Error;

/// Errors shared across the algebra, geometry and transform layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A vector with `u1^2 = u2^2` has no Kelvin inverse.
    #[error("vector lies on the light cone (u1^2 = u2^2), no Kelvin inverse")]
    LightCone,

    /// A scalar function was evaluated outside its domain on an idempotent
    /// component (e.g. `log` or a fractional power at a non-positive value).
    #[error("scalar function undefined at idempotent component {component}")]
    Domain { component: f64 },

    /// A matrix expected in SL(2,R) has determinant away from 1.
    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: f64 },

    /// A point lies outside the domain of the requested map.
    #[error("point outside the domain of the map")]
    OutOfDomain,

    /// The subgroup part of a group element cannot be extracted.
    #[error("group element is degenerate, no section/subgroup factorization")]
    DegenerateElement,

    /// A Moebius denominator is non-invertible at the given point.
    #[error("singular denominator: point maps through the light cone at infinity")]
    SingularDenominator,

    /// Circle radius parameter outside [-1, 0).
    #[error("radius parameter {lambda} outside [-1, 0)")]
    BadRadius { lambda: f64 },

    /// Principal-value excision sequence failed to converge.
    #[error("principal-value excision did not converge (error estimates non-decreasing)")]
    PvDivergence,

    /// Series or integral evaluated outside its convergence region.
    #[error("outside the convergence region")]
    Convergence,

    /// An even number with a unit component has no inverse of the requested kind.
    #[error("even number component equals 1, factor not invertible")]
    NonInvertible,

    /// Kernel evaluation requested at one of its light-cone singularities.
    #[error("kernel singular at the requested boundary coordinate")]
    LightConeSingularity,

    /// A quadrature or job specification violates its invariants.
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
