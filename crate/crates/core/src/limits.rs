/// Enumeration caps keeping exhaustive sweeps at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum language size for which the full valuation space `{0,1}^L`
    /// may be enumerated (2^cap valuations).
    pub valuation_cap: usize,
    /// Maximum semantics size for which theory-pair spaces are enumerated
    /// by subset intersection.
    pub semantics_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            valuation_cap: 24,
            semantics_cap: 20,
        }
    }
}

impl Limits {
    pub fn with_valuation_cap(cap: usize) -> Self {
        Limits {
            valuation_cap: cap,
            ..Limits::default()
        }
    }
}
