//! Closed-form counts: the ideal-class bounds, the special-quotient table, and
//! the number of transformations with a periodic behavior from state 0.
//!
//! Everything here is generic over the integer type so callers can pick
//! machine words when they know the range, or [`BigCount`] otherwise
//! (`n^(n-1)` leaves `u64` near `n = 17`).

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact integer arithmetic needed by the formulas.
pub trait Count:
    Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + PartialOrd + From<u32>
{
}

impl<T> Count for T where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + PartialOrd + From<u32>
{
}

fn lit<T: Count>(v: usize) -> T {
    T::from(u32::try_from(v).expect("state counts fit in u32"))
}

/// `base^exp` for non-negative `base`, `exp`; `None` when either is negative.
pub fn signed_pow<T: Count>(base: i64, exp: i64) -> Option<T> {
    if base < 0 || exp < 0 {
        return None;
    }
    Some(num_traits::pow(lit::<T>(base as usize), exp as usize))
}

fn pow<T: Count>(base: usize, exp: usize) -> T {
    num_traits::pow(lit::<T>(base), exp)
}

/// The three ideal classes with a closed-form complexity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Right,
    Left,
    TwoSided,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Right, Family::Left, Family::TwoSided];

    pub fn name(self) -> &'static str {
        match self {
            Family::Right => "right",
            Family::Left => "left",
            Family::TwoSided => "two-sided",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Family::Right),
            "left" => Ok(Family::Left),
            "two-sided" | "two_sided" | "twosided" => Ok(Family::TwoSided),
            other => Err(Error::InvalidWitness(format!("unknown family {other:?}"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> serde::Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = <String as serde::Deserialize>::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The complexity of the family's maximal witness:
/// right `n^(n-1)`, left `n^(n-1) + n - 1`, two-sided `n^(n-2) + (n-2)2^(n-2) + 1`.
pub fn closed_form_bound<T: Count>(family: Family, n: usize) -> Result<T> {
    match family {
        Family::Right | Family::Left if n == 0 => {
            Err(Error::InvalidWitness("bound needs n >= 1".into()))
        }
        Family::Right => Ok(pow(n, n - 1)),
        Family::Left => Ok(pow::<T>(n, n - 1) + lit(n - 1)),
        Family::TwoSided if n < 2 => Err(Error::InvalidWitness(
            "two-sided bound needs n >= 2".into(),
        )),
        Family::TwoSided => {
            Ok(pow::<T>(n, n - 2) + lit::<T>(n - 2) * pow(2, n - 2) + T::one())
        }
    }
}

/// Number of transformations of `{0..n-1}` whose behavior from state 0 has
/// period at least 2: `sum_{j=2..n} (n-1)!/(n-j)! * (j-1) * n^(n-j)`.
pub fn ruled_out_count_formula<T: Count>(n: usize) -> T {
    let mut total = T::zero();
    // falling = (n-1)!/(n-j)!, built up one factor per j
    let mut falling = T::one();
    for j in 2..=n {
        falling = falling * lit(n - j + 1);
        total = total + falling.clone() * lit(j - 1) * pow(n, n - j);
    }
    total
}

/// Which special quotients a language has: ∅, Σ*, ε, Σ⁺.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SpecialQuotients {
    pub empty: bool,
    pub sigma_star: bool,
    pub epsilon: bool,
    pub sigma_plus: bool,
}

impl SpecialQuotients {
    /// Exponent offset `k` of the special-quotient table row matching this
    /// flag set exactly, or `None` for flag sets the table does not list.
    pub fn table_row(self) -> Option<usize> {
        let SpecialQuotients {
            empty: e,
            sigma_star: s,
            epsilon: eps,
            sigma_plus: p,
        } = self;
        match (e, s, eps, p) {
            (true, false, false, false) | (false, true, false, false) => Some(1),
            (true, false, true, false) | (false, true, false, true) | (true, true, false, false) => {
                Some(2)
            }
            (true, true, false, true) | (true, true, true, false) => Some(3),
            (true, true, true, true) => Some(4),
            _ => None,
        }
    }
}

/// One candidate upper bound on σ and where it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCandidate<T> {
    pub source: &'static str,
    pub value: T,
    /// False for the cumulative "L_a ur" table cells, which fail for some
    /// languages with `n >= 4` (e.g. `aaa` over `{a}`: cell 2, σ 4). Only
    /// certified candidates should be used as a bound.
    pub certified: bool,
}

/// Upper bounds on σ for a language with `n` quotients, given its special
/// quotients and unique-reachability flags: the individual special-quotient
/// facts, the cumulative table row (plain, "L is ur" and "L_a is ur"
/// columns as printed), and `n^n`. Cells whose base or exponent would be
/// negative are meaningless and omitted.
pub fn special_quotient_candidates<T: Count>(
    n: usize,
    q: SpecialQuotients,
    l_ur: bool,
    la_ur: bool,
) -> Vec<BoundCandidate<T>> {
    let n_i = n as i64;
    let mut out = vec![BoundCandidate {
        source: "n^n",
        value: pow(n, n),
        certified: true,
    }];
    let mut add = |source, value: Option<T>| {
        if let Some(value) = value {
            out.push(BoundCandidate {
                source,
                value,
                certified: source != "table row, L_a ur",
            });
        }
    };
    if q.empty || q.sigma_star {
        add("has ∅ or Σ*: n^(n-1)", signed_pow(n_i, n_i - 1));
    }
    if q.epsilon || q.sigma_plus {
        add("has ε or Σ+: n^(n-2)", signed_pow(n_i, n_i - 2));
    }
    if l_ur {
        add("L ur: (n-1)^n", signed_pow(n_i - 1, n_i));
    }
    if la_ur {
        add(
            "L_a ur: 1+(n-2)^n",
            signed_pow::<T>(n_i - 2, n_i).map(|v| v + T::one()),
        );
    }
    if let Some(k) = q.table_row() {
        let k = k as i64;
        add("table row", signed_pow(n_i, n_i - k));
        if l_ur {
            add("table row, L ur", signed_pow(n_i - 1, n_i - k));
        }
        if la_ur {
            add(
                "table row, L_a ur",
                signed_pow::<T>(n_i - k - 2, n_i - 2).map(|v| v + T::one()),
            );
        }
    }
    out
}
