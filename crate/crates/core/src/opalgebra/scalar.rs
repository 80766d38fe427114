/// The cyclic group generated by ζ: infinite when ζ is generic, `Z/M` when
/// ζ has order `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ScalarGroup {
    pub order: Option<u64>,
}

impl ScalarGroup {
    pub const GENERIC: ScalarGroup = ScalarGroup { order: None };

    pub fn finite(m: u64) -> Self {
        assert!(m > 0, "order of ζ must be positive");
        ScalarGroup { order: Some(m) }
    }

    pub fn reduce(&self, k: i64) -> i64 {
        match self.order {
            None => k,
            Some(m) => k.rem_euclid(m as i64),
        }
    }

    /// Order of `z = ζ^-6`.
    pub fn z_order(&self) -> Option<u64> {
        self.order.map(|m| m / gcd(m, 6))
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
