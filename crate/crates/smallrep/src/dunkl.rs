//! Rational Dunkl operators T_k(ξ) acting on polynomials.
//!
//! Polynomials "on a" reuse [`crate::polyalg::Poly`] by identifying a ≅ a*
//! through the standard form: a point ξ has the same coordinate vector as
//! its image ⟨ξ, ·⟩, roots act through the same reflection matrices on both
//! sides, and the linear function α on a has coefficient vector G·α. With
//! that identification,
//!
//!   T_k(ξ) f  =  ∂(ξ) f  +  Σ_{α ∈ Σ⁺}  k(α) · α(ξ) · (f − s_α f)/α,
//!
//! where the sum runs over the positive roots of the possibly non-reduced
//! system (a doubled root 2α enters with its own k(2α)).

use crate::error::Result;
use crate::linalg::Mat;
use crate::polyalg::{divided_difference, Poly};
use crate::rootsys::mult::MultiplicityFunction;
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::RootSystem;
use crate::scalar::{rint, Rat};
use num_traits::Zero;

pub struct DunklOperator<'a> {
    pub rs: &'a RootSystem,
    pub w: &'a WeylGroup,
    pub kfun: &'a MultiplicityFunction,
    pub xi: Vec<Rat>,
}

/// Coefficients of the linear function `v ↦ ⟨root, v⟩` on a.
fn root_form(rs: &RootSystem, root: &[Rat]) -> Vec<Rat> {
    (0..rs.rank)
        .map(|i| {
            let mut acc = Rat::zero();
            for j in 0..rs.rank {
                acc += rs.gram_std.at(i, j) * &root[j];
            }
            acc
        })
        .collect()
}

impl<'a> DunklOperator<'a> {
    pub fn new(
        rs: &'a RootSystem,
        w: &'a WeylGroup,
        kfun: &'a MultiplicityFunction,
        xi: Vec<Rat>,
    ) -> Self {
        DunklOperator { rs, w, kfun, xi }
    }

    pub fn apply(&self, f: &Poly<Rat>) -> Result<Poly<Rat>> {
        let rs = self.rs;
        let mut out = Poly::zero(rs.rank);
        for (i, c) in self.xi.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&f.deriv(i).scale(c));
            }
        }
        for term in self.kfun.dunkl_terms(rs, self.w) {
            let alpha: Vec<Rat> = rs.roots[term.root_idx]
                .iter()
                .map(|x| x * rint(term.scale))
                .collect();
            let form = root_form(rs, &alpha);
            let pairing: Rat = form.iter().zip(&self.xi).map(|(a, b)| a * b).sum();
            if pairing.is_zero() {
                continue;
            }
            let sf = f.act_matrix(&rs.reflection_matrix(term.root_idx));
            if sf == *f {
                continue;
            }
            let dd = divided_difference(rs, &Poly::linear_rat(&form), f)?;
            out = out.add(&dd.scale(&(term.value * pairing)));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct CommutatorReport {
    pub ok: bool,
    pub degree_checked: u32,
    /// Exponents of the first monomial where the commutator failed, with
    /// the nonzero difference.
    pub first_failure: Option<(Vec<u32>, Poly<Rat>)>,
}

/// Check T(ξ)T(η) = T(η)T(ξ) on every monomial of degree ≤ `max_degree`.
pub fn dunkl_commutator_check(
    rs: &RootSystem,
    w: &WeylGroup,
    kfun: &MultiplicityFunction,
    xi: &[Rat],
    eta: &[Rat],
    max_degree: u32,
) -> Result<CommutatorReport> {
    let txi = DunklOperator::new(rs, w, kfun, xi.to_vec());
    let teta = DunklOperator::new(rs, w, kfun, eta.to_vec());
    for m in crate::polyalg::monomials_up_to(rs.rank, max_degree) {
        let f = Poly::monomial(m.clone(), Rat::from(rint(1)));
        let ab = txi.apply(&teta.apply(&f)?)?;
        let ba = teta.apply(&txi.apply(&f)?)?;
        let diff = ab.sub(&ba);
        if !diff.is_zero() {
            return Ok(CommutatorReport {
                ok: false,
                degree_checked: max_degree,
                first_failure: Some((m.0.clone(), diff)),
            });
        }
    }
    Ok(CommutatorReport {
        ok: true,
        degree_checked: max_degree,
        first_failure: None,
    })
}

/// w ∘ T(ξ) = T(wξ) ∘ w on all monomials of degree ≤ `max_degree`, all w.
pub fn dunkl_equivariance_check(
    rs: &RootSystem,
    w: &WeylGroup,
    kfun: &MultiplicityFunction,
    xi: &[Rat],
    max_degree: u32,
) -> Result<bool> {
    let t = DunklOperator::new(rs, w, kfun, xi.to_vec());
    for g in 0..w.order() {
        let gxi = w.elements[g].matrix.mul_vec(xi);
        let tg = DunklOperator::new(rs, w, kfun, gxi);
        for m in crate::polyalg::monomials_up_to(rs.rank, max_degree) {
            let f = Poly::monomial(m, rint(1));
            let lhs = crate::polyalg::weyl_act(w, g, &t.apply(&f)?);
            let rhs = tg.apply(&crate::polyalg::weyl_act(w, g, &f))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Convenience: the reflection matrix of a root as a matrix on a (identical
/// to the one on a* under the identification).
pub fn point_reflection(rs: &RootSystem, root_idx: usize) -> Mat<Rat> {
    rs.reflection_matrix(root_idx)
}
