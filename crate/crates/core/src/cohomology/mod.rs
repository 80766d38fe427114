//! Extension-class arithmetic on the span of the signature class `χ` and
//! the Euler classes `e_1, …, e_s`.
//!
//! A class is stored by its coordinates in that span. At genus 2 the
//! coordinate of `χ` lives in `Z/10`; at genus 3 and above it is an integer.
//! Nothing here claims the span is all of `H²`: at genus 3 there may be
//! further 2-torsion classes, and those are simply not representable.

use std::fmt;
use std::ops::Add;

use crate::opalgebra::{gcd, ScalarGroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("lifts are not normalized: {0}")]
    NotNormalized(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("unsupported coefficient map: {0}")]
    UnsupportedMap(String),
    #[error("genus {0} is below 2")]
    BadGenus(u32),
}

/// Exponents of `z = ζ^-6` in the lifts of the relations of a presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LiftData {
    pub chain_exp: i64,
    pub puncture_exps: Vec<i64>,
    pub lantern_exp: i64,
    pub braid_exps: Vec<i64>,
}

impl LiftData {
    /// Normalized data: the lantern and braid lifts are trivial.
    pub fn new(chain_exp: i64, puncture_exps: Vec<i64>) -> Self {
        LiftData { chain_exp, puncture_exps, lantern_exp: 0, braid_exps: Vec::new() }
    }
}

impl Add for &LiftData {
    type Output = Result<LiftData, CohomologyError>;

    fn add(self, o: &LiftData) -> Self::Output {
        Ok(LiftData {
            chain_exp: self.chain_exp + o.chain_exp,
            puncture_exps: add_vec(&self.puncture_exps, &o.puncture_exps)?,
            lantern_exp: self.lantern_exp + o.lantern_exp,
            braid_exps: add_vec(&self.braid_exps, &o.braid_exps)?,
        })
    }
}

fn add_vec(a: &[i64], b: &[i64]) -> Result<Vec<i64>, CohomologyError> {
    if a.len() != b.len() {
        return Err(CohomologyError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x + y).collect())
}

/// The coefficient group `A`: `Z` or `Z/N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coefficients {
    pub order: Option<u64>,
}

impl Coefficients {
    pub const Z: Coefficients = Coefficients { order: None };

    pub fn cyclic(n: u64) -> Self {
        Coefficients { order: Some(n) }
    }

    /// `A = ⟨ζ^-6⟩` inside the scalars.
    pub fn of_scalars(s: ScalarGroup) -> Self {
        Coefficients { order: s.z_order() }
    }

    fn reduce(&self, x: i64) -> i64 {
        match self.order {
            None => x,
            Some(n) => x.rem_euclid(n as i64),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            None => write!(f, "Z"),
            Some(n) => write!(f, "Z/{n}"),
        }
    }
}

/// Where a change of coefficients sends `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientMap {
    /// `A → Z/N`, reduction mod `N`.
    Reduce(u64),
    /// An embedding into a divisible group such as `C*` or `Q/Z`.
    Divisible,
}

/// A class `c·χ + Σ a_i e_i` in `H²(Γ; A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionClass {
    pub genus: u32,
    pub punctures: usize,
    pub chi_coeff: i64,
    pub euler_coeffs: Vec<i64>,
    pub coefficients: Coefficients,
}

impl ExtensionClass {
    pub fn new(
        genus: u32,
        chi_coeff: i64,
        euler_coeffs: Vec<i64>,
        coefficients: Coefficients,
    ) -> Result<Self, CohomologyError> {
        if genus < 2 {
            return Err(CohomologyError::BadGenus(genus));
        }
        let mut c = ExtensionClass { genus, punctures: euler_coeffs.len(), chi_coeff, euler_coeffs, coefficients };
        c.normalize();
        Ok(c)
    }

    /// Order of the group the `χ` coordinate lives in, `None` for `Z`.
    pub fn chi_order(&self) -> Option<u64> {
        match (self.genus, self.coefficients.order) {
            // H_1 of the genus 2 mapping class group is Z/10
            (2, None) => Some(10),
            (2, Some(n)) => Some(gcd(10, n)),
            (_, n) => n,
        }
    }

    fn normalize(&mut self) {
        if let Some(m) = self.chi_order() {
            self.chi_coeff = self.chi_coeff.rem_euclid(m as i64);
        }
        let a = self.coefficients;
        for x in &mut self.euler_coeffs {
            *x = a.reduce(*x);
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.chi_coeff == 0 && self.euler_coeffs.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for ExtensionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if self.chi_coeff != 0 {
            terms.push(format!("{}*chi", self.chi_coeff));
        }
        for (i, &a) in self.euler_coeffs.iter().enumerate() {
            if a != 0 {
                terms.push(format!("{a}*e{}", i + 1));
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} (A = {})", terms.join(" + "), self.coefficients)
    }
}

/// The class of the extension whose relation lifts are `d`, on a surface of
/// genus `g` with `s` punctures, with integer coefficients.
pub fn class_from_lifts(d: &LiftData, g: u32, s: usize) -> Result<ExtensionClass, CohomologyError> {
    class_from_lifts_in(d, g, s, Coefficients::Z)
}

pub fn class_from_lifts_in(
    d: &LiftData,
    g: u32,
    s: usize,
    a: Coefficients,
) -> Result<ExtensionClass, CohomologyError> {
    if d.lantern_exp != 0 {
        return Err(CohomologyError::NotNormalized(format!("lantern lift z^{}", d.lantern_exp)));
    }
    if let Some((i, b)) = d.braid_exps.iter().enumerate().find(|(_, &b)| b != 0) {
        return Err(CohomologyError::NotNormalized(format!("braid lift {} is z^{b}", i + 1)));
    }
    if d.puncture_exps.len() != s {
        return Err(CohomologyError::LengthMismatch(d.puncture_exps.len(), s));
    }
    ExtensionClass::new(g, d.chain_exp, d.puncture_exps.clone(), a)
}

/// `Σ a_i c_i` for Euler parts `c_i`, all of the same length.
pub fn pushforward(classes: &[Vec<i64>], a: &[i64]) -> Result<Vec<i64>, CohomologyError> {
    if classes.len() != a.len() {
        return Err(CohomologyError::LengthMismatch(classes.len(), a.len()));
    }
    let s = classes.first().map_or(0, Vec::len);
    let mut out = vec![0i64; s];
    for (c, &k) in classes.iter().zip(a) {
        if c.len() != s {
            return Err(CohomologyError::LengthMismatch(c.len(), s));
        }
        for (o, x) in out.iter_mut().zip(c) {
            *o += k * x;
        }
    }
    Ok(out)
}

/// The Euler classes `e_1, …, e_s` as unit vectors.
pub fn euler_basis(s: usize) -> Vec<Vec<i64>> {
    (0..s).map(|i| (0..s).map(|j| (i == j) as i64).collect()).collect()
}

pub fn change_coefficients(c: &ExtensionClass, target: CoefficientMap) -> Result<ExtensionClass, CohomologyError> {
    match target {
        CoefficientMap::Reduce(0) => Err(CohomologyError::UnsupportedMap("reduction mod 0".into())),
        CoefficientMap::Reduce(n) => {
            if let Some(m) = c.coefficients.order {
                if m % n != 0 {
                    return Err(CohomologyError::UnsupportedMap(format!("no reduction Z/{m} → Z/{n}")));
                }
            }
            ExtensionClass::new(c.genus, c.chi_coeff, c.euler_coeffs.clone(), Coefficients::cyclic(n))
        }
        CoefficientMap::Divisible => {
            if c.coefficients.order.is_some() {
                return Err(CohomologyError::UnsupportedMap("embedding a finite coefficient group".into()));
            }
            // at genus 2, χ is torsion and dies in a divisible group
            let chi = if c.genus == 2 { 0 } else { c.chi_coeff };
            let mut out = c.clone();
            out.chi_coeff = chi;
            Ok(out)
        }
    }
}

/// Order of `A = ⟨ζ^-6⟩` when ζ has order `zeta_order`; `None` is infinite.
pub fn scalar_group_order(zeta_order: Option<u64>) -> Option<u64> {
    match zeta_order {
        None => None,
        Some(m) => ScalarGroup::finite(m).z_order(),
    }
}
