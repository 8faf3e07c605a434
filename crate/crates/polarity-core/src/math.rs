//! Thin wrappers over libm so every build (std or not) evaluates floats
//! through the same code path.

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// Rounds half away from zero, like `f64::round`.
pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}
