use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// A finitely generated abelian group `Z/c_1 + ... + Z/c_k + Z^r` in
/// invariant-factor form: every `c_i >= 2` and `c_i | c_(i+1)`.
///
/// Equality is structural, which coincides with isomorphism because the
/// representation is normalized.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigUint>,
    free_rank: usize,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(order: impl Into<BigUint>) -> Self {
        Self::from_cyclic_orders([order.into()])
    }

    /// Normalizes a direct sum of cyclic groups `Z/a_1 + Z/a_2 + ...`.
    /// An order of zero stands for an infinite cyclic summand; orders of one
    /// are dropped.
    pub fn from_cyclic_orders<I>(orders: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigUint>,
    {
        let mut free_rank = 0;
        let mut finite = Vec::new();
        for a in orders {
            let a: BigUint = a.into();
            if a.is_zero() {
                free_rank += 1;
            } else if !a.is_one() {
                finite.push(a);
            }
        }
        // Pairwise (gcd, lcm) sweeps: after processing index i, entry i
        // divides every later entry, and the product is unchanged.
        for i in 0..finite.len() {
            for j in i + 1..finite.len() {
                let g = finite[i].gcd(&finite[j]);
                let l = &finite[i] / &g * &finite[j];
                finite[i] = g;
                finite[j] = l;
            }
        }
        finite.retain(|c| !c.is_one());
        Self {
            invariant_factors: finite,
            free_rank,
        }
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Torsion subgroup.
    pub fn torsion(&self) -> Self {
        Self {
            invariant_factors: self.invariant_factors.clone(),
            free_rank: 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// At most one cyclic summand (the trivial group counts as cyclic).
    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() + self.free_rank <= 1
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|o| o.to_u64())
    }

    /// `Hom(G, Q/Z)` of the torsion part. A finite abelian group is
    /// (non-canonically) isomorphic to its dual, so the invariant factors
    /// carry over unchanged.
    pub fn dual(&self) -> Self {
        self.torsion()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut g = Self::from_cyclic_orders(
            self.invariant_factors
                .iter()
                .chain(&other.invariant_factors)
                .cloned(),
        );
        g.free_rank = self.free_rank + other.free_rank;
        g
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|c| format!("Z/{c}"))
            .collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Serialized as the list of invariant factors; factors beyond `u64` are
/// written as decimal strings. The free rank is not part of this encoding.
impl Serialize for FiniteAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.invariant_factors.len()))?;
        for c in &self.invariant_factors {
            match c.to_u64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}
