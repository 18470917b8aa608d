//! W-invariant multiplicity functions on a root system, with optional
//! non-reduced (BC-type) doubling of the short roots of type B.

use super::weyl::WeylGroup;
use super::RootSystem;
use crate::error::{Error, Result};
use crate::scalar::{rint, Rat};
use num_traits::Zero;

/// One summand of a Dunkl operator / one root of the (possibly non-reduced)
/// system: the vector is `scale · roots[root_idx]` with `scale ∈ {1, 2}`.
#[derive(Clone, Debug)]
pub struct RootTerm {
    pub root_idx: usize,
    pub scale: i64,
    pub value: Rat,
}

#[derive(Clone, Debug)]
pub struct MultiplicityFunction {
    /// m(α), one value per W-orbit of roots.
    pub orbit_values: Vec<Rat>,
    /// m(2α) per orbit, nonzero only for the doubled orbit of a BC system.
    pub double_values: Vec<Rat>,
    /// Which orbit (if any) is doubled.
    pub doubled_orbit: Option<usize>,
    pub label: String,
}

impl MultiplicityFunction {
    pub fn constant(w: &WeylGroup, value: Rat) -> Self {
        let n = w.root_orbits.len();
        MultiplicityFunction {
            orbit_values: vec![value.clone(); n],
            double_values: vec![Rat::zero(); n],
            doubled_orbit: None,
            label: format!("k={value}"),
        }
    }

    /// One value per root orbit, in the order of `w.root_orbits` (orbits are
    /// ordered by their minimal root index, so the orbit of the first simple
    /// root comes first).
    pub fn from_orbit_values(w: &WeylGroup, values: &[Rat]) -> Result<Self> {
        let n = w.root_orbits.len();
        if values.len() != n {
            return Err(Error::OrbitMissingMultiplicity(n));
        }
        let label = values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        Ok(MultiplicityFunction {
            orbit_values: values.to_vec(),
            double_values: vec![Rat::zero(); n],
            doubled_orbit: None,
            label: format!("k=({label})"),
        })
    }

    /// Non-reduced extension BC_n on top of type B_n: the short roots `e_i`
    /// acquire doubles `2e_i` with their own multiplicity.
    pub fn bc(
        rs: &RootSystem,
        w: &WeylGroup,
        m_long: Rat,
        m_short: Rat,
        m_double: Rat,
    ) -> Result<Self> {
        if rs.family != 'B' {
            return Err(Error::Invalid(format!(
                "BC multiplicities require type B, got {}",
                rs.type_name()
            )));
        }
        let n = w.root_orbits.len();
        let mut orbit_values = vec![Rat::zero(); n];
        let mut double_values = vec![Rat::zero(); n];
        let mut doubled = None;
        for (oid, orbit) in w.root_orbits.iter().enumerate() {
            let r = orbit[0];
            let len2 = rs.ip_std(&rs.roots[r], &rs.roots[r]);
            if len2 == rint(2) {
                orbit_values[oid] = m_long.clone();
            } else {
                orbit_values[oid] = m_short.clone();
                double_values[oid] = m_double.clone();
                doubled = Some(oid);
            }
        }
        Ok(MultiplicityFunction {
            orbit_values,
            double_values,
            doubled_orbit: doubled,
            label: format!("bc=({m_long},{m_short},{m_double})"),
        })
    }

    /// The geometric (symmetric-space) preset for the "complex case":
    /// every root multiplicity equals 2.
    pub fn geometric_complex(w: &WeylGroup) -> Self {
        let mut m = Self::constant(w, rint(2));
        m.label = "geometric:complex".into();
        m
    }

    pub fn value(&self, w: &WeylGroup, root_idx: usize) -> &Rat {
        &self.orbit_values[w.orbit_of_root[root_idx]]
    }

    pub fn double_value(&self, w: &WeylGroup, root_idx: usize) -> &Rat {
        &self.double_values[w.orbit_of_root[root_idx]]
    }

    /// The graded-Hecke parameter attached to this multiplicity function,
    /// `k(α) = m(α) + 2·m(2α)`, with `m(2α) = 0` when the system is reduced.
    pub fn hecke_k(&self, w: &WeylGroup, root_idx: usize) -> Rat {
        let oid = w.orbit_of_root[root_idx];
        &self.orbit_values[oid] + rint(2) * &self.double_values[oid]
    }

    /// `k` per orbit, in orbit order.
    pub fn hecke_k_orbits(&self) -> Vec<Rat> {
        self.orbit_values
            .iter()
            .zip(&self.double_values)
            .map(|(m, d)| m + rint(2) * d)
            .collect()
    }

    /// All summands of the positive half of the (possibly non-reduced)
    /// system, for Dunkl-type sums.
    pub fn dunkl_terms(&self, rs: &RootSystem, w: &WeylGroup) -> Vec<RootTerm> {
        let mut out = Vec::new();
        for r in 0..rs.n_positive {
            let v = self.value(w, r);
            if !v.is_zero() {
                out.push(RootTerm {
                    root_idx: r,
                    scale: 1,
                    value: v.clone(),
                });
            }
            let d = self.double_value(w, r);
            if !d.is_zero() {
                out.push(RootTerm {
                    root_idx: r,
                    scale: 2,
                    value: d.clone(),
                });
            }
        }
        out
    }

    /// Check W-invariance directly (always true by construction; kept as a
    /// verification hook for reports).
    pub fn is_w_invariant(&self, w: &WeylGroup) -> bool {
        (0..w.root_action[0].len()).all(|r| {
            (0..w.order()).all(|g| {
                w.orbit_of_root[w.root_action[g][r] as usize] == w.orbit_of_root[r]
            })
        })
    }
}
