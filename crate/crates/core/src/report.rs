//! Verification outcomes shared by every decision procedure.

use std::fmt;
use std::time::Duration;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bigpoly::{IntPoly, LaurentPoly};

/// Parameter tuple of one verification cell. Families read only the fields
/// they use; the rest stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    pub n: Option<u64>,
    pub r: Option<u64>,
    pub s: Option<u64>,
    pub d: Option<u64>,
    pub t: Option<u64>,
    /// Block index `s` in `sd + t` splittings.
    pub sidx: Option<u64>,
    pub k: Option<u64>,
    pub p: Option<u64>,
    /// Exponent `b` when a check runs in `q^b`.
    pub base: Option<u64>,
}

macro_rules! with_field {
    ($($name:ident => $field:ident),*) => {
        $(
            pub fn $name(mut self, v: u64) -> Self {
                self.$field = Some(v);
                self
            }
        )*
    };
}

impl FamilyParams {
    with_field!(with_n => n, with_r => r, with_s => s, with_d => d, with_t => t,
        with_sidx => sidx, with_k => k, with_p => p, with_base => base);

    /// `(name, value)` for every populated field, in declaration order.
    pub fn fields(&self) -> Vec<(&'static str, u64)> {
        [
            ("n", self.n),
            ("r", self.r),
            ("s", self.s),
            ("d", self.d),
            ("t", self.t),
            ("sidx", self.sidx),
            ("k", self.k),
            ("p", self.p),
            ("base", self.base),
        ]
        .into_iter()
        .filter_map(|(name, v)| v.map(|v| (name, v)))
        .collect()
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .fields()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Multiplicity found for one irreducible cyclotomic factor `Φ_d(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCheck {
    pub d: u64,
    pub required: u32,
    /// Multiplicity of `Φ_d` in the numerator, counted up to `required + 1`.
    pub found: u32,
    pub denominator_coprime: bool,
}

impl FactorCheck {
    pub fn holds(&self) -> bool {
        self.denominator_coprime && self.found >= self.required
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// `value = modulus · quotient`.
    Quotient(LaurentPoly),
    /// Nonzero remainder left by the division.
    Remainder(LaurentPoly),
    /// Residue of the cleared cross-difference modulo the modulus; zero
    /// exactly when the congruence holds.
    Residue(IntPoly),
    Factorwise(Vec<FactorCheck>),
    Integer { value: BigInt, modulus: BigInt },
    PAdic { difference: BigRational, p: u64, required: u32 },
    Bracket { lower: f64, upper: f64, target: f64, midpoint_error: f64 },
    /// Two independently built polynomials compared for equality; carries
    /// their difference (zero when equal).
    Identity { difference: IntPoly },
}

impl Witness {
    /// Degree of the polynomial evidence, if any.
    pub fn degree(&self) -> Option<i64> {
        match self {
            Witness::Quotient(p) | Witness::Remainder(p) => p.degree(),
            Witness::Residue(p) | Witness::Identity { difference: p } => {
                p.degree().map(|d| d as i64)
            }
            _ => None,
        }
    }
}

/// Outcome of a single decision procedure.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Witness,
}

/// Structured result of verifying one (family, parameters) cell.
#[derive(Debug, Clone)]
pub struct CongruenceReport {
    pub family: &'static str,
    pub params: FamilyParams,
    pub holds: bool,
    pub witness: Witness,
    /// Highest exponent of the verified left-hand side (numerator for
    /// rational families).
    pub lhs_degree: Option<i64>,
    pub modulus_degree: Option<usize>,
    /// Lowest exponent of the left-hand side.
    pub valuation: Option<i64>,
    pub elapsed: Duration,
}

impl CongruenceReport {
    pub fn new(family: &'static str, params: FamilyParams, verdict: Verdict) -> Self {
        CongruenceReport {
            family,
            params,
            holds: verdict.holds,
            witness: verdict.witness,
            lhs_degree: None,
            modulus_degree: None,
            valuation: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_lhs(mut self, lhs: &LaurentPoly) -> Self {
        self.lhs_degree = lhs.degree();
        self.valuation = (!lhs.is_zero()).then(|| lhs.valuation());
        self
    }

    pub fn with_modulus(mut self, modulus: &IntPoly) -> Self {
        self.modulus_degree = modulus.degree();
        self
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    pub fn witness_degree(&self) -> Option<i64> {
        self.witness.degree()
    }
}
