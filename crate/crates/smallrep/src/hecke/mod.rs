//! The degenerate affine Hecke algebra H_k with exact normal-form
//! arithmetic, the polynomial module S_H(a) with its W-action, and the
//! rank-1 projection polynomial.
//!
//! Elements are kept in the normal form Σ f_w ⊗ w with polynomials on the
//! left. The defining relation, for a simple root α and ξ ∈ a,
//!
//!   s_α · ξ = s_α(ξ) · s_α − k(α) α(ξ),
//!
//! extends by induction on degree to the rewrite
//!
//!   s_α · f = (s_α f) · s_α − k(α) Δ̂_α(f),   Δ̂_α(f) = (f − s_α f)/α∨,
//!
//! where the divided difference divides by the *coroot* as a linear form on
//! a*: for deg f = 1 the relation produces k(α) α(ξ), and α(ξ) =
//! Δ̂_α(ξ)·α(α∨)/2 · … collapses to (ξ − s_αξ)/α∨ exactly because
//! ξ − s_α(ξ) = α(ξ) α∨.

pub mod alambda;

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::polyalg::{divided_difference, monomials_up_to, Poly};
use crate::rootsys::mult::MultiplicityFunction;
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::RootSystem;
use crate::scalar::{KRat, Rat, Scalar, UPoly};

pub struct HeckeAlgebra<'a, S: Scalar> {
    pub rs: &'a RootSystem,
    pub w: &'a WeylGroup,
    /// k(α) per W-orbit of roots (constant on orbits by construction).
    pub k_orbit: Vec<S>,
}

impl<'a, S: Scalar> HeckeAlgebra<'a, S> {
    pub fn new(rs: &'a RootSystem, w: &'a WeylGroup, k_orbit: Vec<S>) -> Result<Self> {
        if k_orbit.len() != w.root_orbits.len() {
            return Err(Error::ParameterMismatch(format!(
                "expected {} orbit parameters, got {}",
                w.root_orbits.len(),
                k_orbit.len()
            )));
        }
        Ok(HeckeAlgebra { rs, w, k_orbit })
    }

    pub fn k_of_root(&self, root_idx: usize) -> &S {
        &self.k_orbit[self.w.orbit_of_root[root_idx]]
    }

    /// Coroot α∨ of a root as a degree-1 element of S(a).
    pub fn coroot_poly(&self, root_idx: usize) -> Poly<S> {
        let coeffs: Vec<S> = self
            .rs
            .coroot_form(root_idx)
            .iter()
            .map(S::from_rat)
            .collect();
        Poly::linear(&coeffs)
    }

    fn divided(&self, root_idx: usize, f: &Poly<S>) -> Result<Poly<S>> {
        divided_difference(self.rs, &self.coroot_poly(root_idx), f)
    }
}

impl<'a> HeckeAlgebra<'a, Rat> {
    /// Parameters from a multiplicity function, k(α) = m(α) + 2m(2α).
    pub fn from_mult(
        rs: &'a RootSystem,
        w: &'a WeylGroup,
        m: &MultiplicityFunction,
    ) -> Result<Self> {
        HeckeAlgebra::new(rs, w, m.hecke_k_orbits())
    }
}

impl<'a> HeckeAlgebra<'a, KRat> {
    /// Formal-parameter mode: every orbit carries the same symbol k.
    pub fn generic(rs: &'a RootSystem, w: &'a WeylGroup) -> Self {
        HeckeAlgebra {
            rs,
            w,
            k_orbit: vec![KRat::k(); w.root_orbits.len()],
        }
    }
}

/// Normal form Σ f_w ⊗ w; entries with zero polynomial are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<S: Scalar> {
    pub terms: BTreeMap<usize, Poly<S>>,
}

impl<S: Scalar> HeckeElement<S> {
    pub fn zero() -> Self {
        HeckeElement { terms: BTreeMap::new() }
    }

    pub fn from_poly(f: Poly<S>) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(0usize, f);
        }
        HeckeElement { terms }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Poly::constant(nvars, S::one()))
    }

    pub fn from_group(nvars: usize, widx: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(widx, Poly::constant(nvars, S::one()));
        HeckeElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&w, p) in &other.terms {
            let q = match terms.remove(&w) {
                Some(existing) => existing.add(p),
                None => p.clone(),
            };
            if !q.is_zero() {
                terms.insert(w, q);
            }
        }
        HeckeElement { terms }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HeckeElement {
            terms: self.terms.iter().map(|(&w, p)| (w, p.scale(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-S::one())))
    }
}

/// s_i · x in normal form, for a simple reflection s_i.
fn push_simple_left<S: Scalar>(
    h: &HeckeAlgebra<S>,
    i: usize,
    x: &HeckeElement<S>,
) -> Result<HeckeElement<S>> {
    let refl = h.rs.reflection_matrix(i);
    let si = h.w.gen_index[i];
    let k = h.k_of_root(i).clone();
    let mut out = HeckeElement::zero();
    for (&v, p) in &x.terms {
        let sp = p.act_matrix(&refl);
        let sv = h.w.mul[si][v] as usize;
        let mut t = HeckeElement::zero();
        if !sp.is_zero() {
            t.terms.insert(sv, sp);
        }
        let delta = h.divided(i, p)?;
        out = out.add(&t);
        if !delta.is_zero() {
            out = out.add(&HeckeElement {
                terms: BTreeMap::from([(v, delta.scale(&(-k.clone())))]),
            });
        }
    }
    Ok(out)
}

/// u · g for a group element and a polynomial, in normal form.
pub fn group_times_poly<S: Scalar>(
    h: &HeckeAlgebra<S>,
    u: usize,
    g: &Poly<S>,
) -> Result<HeckeElement<S>> {
    let mut x = HeckeElement::from_poly(g.clone());
    for &i in h.w.elements[u].word.iter().rev() {
        x = push_simple_left(h, i, &x)?;
    }
    Ok(x)
}

pub fn hecke_mul<S: Scalar>(
    h: &HeckeAlgebra<S>,
    a: &HeckeElement<S>,
    b: &HeckeElement<S>,
) -> Result<HeckeElement<S>> {
    let mut out = HeckeElement::zero();
    for (&u, f) in &a.terms {
        for (&v, g) in &b.terms {
            let ug = group_times_poly(h, u, g)?;
            for (x, p) in ug.terms {
                let prod = f.mul(&p);
                if prod.is_zero() {
                    continue;
                }
                out = out.add(&HeckeElement {
                    terms: BTreeMap::from([(h.w.mul[x][v] as usize, prod)]),
                });
            }
        }
    }
    Ok(out)
}

/// One simple-reflection step of the ⋆-action on S_H(a) ≅ S(a).
pub fn star_simple<S: Scalar>(h: &HeckeAlgebra<S>, i: usize, f: &Poly<S>) -> Result<Poly<S>> {
    let sf = f.act_matrix(&h.rs.reflection_matrix(i));
    let delta = h.divided(i, f)?;
    Ok(sf.sub(&delta.scale(h.k_of_root(i))))
}

/// w ⋆ f along a reduced word of w.
pub fn sh_act<S: Scalar>(h: &HeckeAlgebra<S>, widx: usize, f: &Poly<S>) -> Result<Poly<S>> {
    let mut g = f.clone();
    for &i in h.w.elements[widx].word.iter().rev() {
        g = star_simple(h, i, &g)?;
    }
    Ok(g)
}

#[derive(Clone, Debug)]
pub struct CenterReport {
    pub is_central: bool,
    pub is_invariant: bool,
    /// Simple-reflection index witnessing non-centrality.
    pub witness: Option<usize>,
}

/// A polynomial is central iff it commutes with every simple reflection,
/// iff it is W-invariant.
pub fn center_check<S: Scalar>(
    h: &HeckeAlgebra<S>,
    f: &Poly<S>,
    max_degree: u32,
) -> Result<CenterReport> {
    if f.degree().unwrap_or(0) > max_degree {
        return Err(Error::DegreeCapExceeded {
            degree: f.degree().unwrap_or(0) as usize,
            cap: max_degree as usize,
        });
    }
    let fe = HeckeElement::from_poly(f.clone());
    let mut witness = None;
    for i in 0..h.rs.rank {
        let si = HeckeElement::from_group(h.rs.rank, h.w.gen_index[i]);
        let ab = hecke_mul(h, &fe, &si)?;
        let ba = hecke_mul(h, &si, &fe)?;
        if ab != ba {
            witness = Some(i);
            break;
        }
    }
    let avg = crate::polyalg::reynolds(h.w, f);
    let is_invariant = avg == *f;
    let rep = CenterReport {
        is_central: witness.is_none(),
        is_invariant,
        witness,
    };
    assert_eq!(rep.is_central, rep.is_invariant, "center = S(a)^W");
    Ok(rep)
}

/// Basis of { f ∈ S^{≤d} : w ⋆ f = f for all w }, echelonized over the
/// monomial basis.
pub fn sh_fixed_space<S: Scalar>(h: &HeckeAlgebra<S>, d: u32) -> Result<Vec<Poly<S>>> {
    let n = h.rs.rank;
    let monos = monomials_up_to(n, d);
    let dim = monos.len();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for i in 0..n {
        // rows of (s_i ⋆ − id) in monomial coordinates, one column per mono
        let mut cols: Vec<Vec<S>> = Vec::with_capacity(dim);
        for m in &monos {
            let f = Poly::monomial(m.clone(), S::one());
            let img = star_simple(h, i, &f)?.sub(&f);
            cols.push(img.to_coeff_vec(&monos));
        }
        for r in 0..dim {
            rows.push((0..dim).map(|c| cols[c][r].clone()).collect());
        }
    }
    let kernel = Mat::from_rows(rows).kernel();
    let sub = Subspace::from_spanning(dim, kernel);
    Ok(sub
        .basis()
        .iter()
        .map(|v| Poly::from_coeff_vec(n, &monos, v))
        .collect())
}

#[derive(Clone, Debug)]
pub struct EigenspaceReport {
    /// dim of (±1)-generators intersected with S^{≤t}, per t = 0..=d.
    pub plus_dims: Vec<usize>,
    pub minus_dims: Vec<usize>,
    pub plus_ok: bool,
    pub minus_ok: bool,
    pub sums_to_whole: bool,
}

/// Lemma-style eigenspace decomposition for one simple root: the +1
/// eigenspace of s_α ⋆ contains S(a(α))·C[(α∨)²], the −1 eigenspace
/// contains the same times (α∨ + k(α)), and together they fill S^{≤d}.
pub fn eigenspace_check<S: Scalar>(
    h: &HeckeAlgebra<S>,
    i: usize,
    d: u32,
) -> Result<EigenspaceReport> {
    let n = h.rs.rank;
    let monos = monomials_up_to(n, d);
    let dim = monos.len();

    // basis of a(α): linear forms on a* vanishing on... i.e. ξ with α(ξ)=0
    let alpha_row = Mat::from_rows(vec![h.rs.roots[i].clone()]);
    let wall: Vec<Poly<S>> = alpha_row
        .kernel()
        .iter()
        .map(|c| {
            let cs: Vec<S> = c.iter().map(S::from_rat).collect();
            Poly::linear(&cs)
        })
        .collect();
    let coroot = h.coroot_poly(i);
    let coroot2 = coroot.mul(&coroot);
    let shift = coroot.add(&Poly::constant(n, h.k_of_root(i).clone()));

    // spanning products: (wall monomials of degree e) · (α∨)^{2m}, e+2m ≤ d
    let mut plus_gens: Vec<(u32, Poly<S>)> = Vec::new();
    for wm in monomials_up_to(wall.len(), d) {
        let wdeg = wm.degree();
        let mut base = Poly::constant(n, S::one());
        for (j, &pw) in wm.0.iter().enumerate() {
            for _ in 0..pw {
                base = base.mul(&wall[j]);
            }
        }
        let mut m2 = 0u32;
        while wdeg + 2 * m2 <= d {
            plus_gens.push((wdeg + 2 * m2, base.mul(&coroot2.pow(m2))));
            m2 += 1;
        }
    }
    plus_gens.sort_by_key(|(t, _)| *t);

    let minus_gens: Vec<(u32, Poly<S>)> = plus_gens
        .iter()
        .filter(|(t, _)| *t + 1 <= d)
        .map(|(t, p)| (*t + 1, p.mul(&shift)))
        .collect();

    let mut plus_ok = true;
    for (_, p) in &plus_gens {
        if star_simple(h, i, p)? != *p {
            plus_ok = false;
        }
    }
    let mut minus_ok = true;
    for (_, p) in &minus_gens {
        if star_simple(h, i, p)? != p.neg() {
            minus_ok = false;
        }
    }

    let filtered_dims = |gens: &[(u32, Poly<S>)]| -> Vec<usize> {
        (0..=d)
            .map(|t| {
                let vecs: Vec<Vec<S>> = gens
                    .iter()
                    .filter(|(g, _)| *g <= t)
                    .map(|(_, p)| p.to_coeff_vec(&monos))
                    .collect();
                Subspace::from_spanning(dim, vecs).dim()
            })
            .collect()
    };
    let plus_dims = filtered_dims(&plus_gens);
    let minus_dims = filtered_dims(&minus_gens);

    let mut all: Vec<Vec<S>> = plus_gens.iter().map(|(_, p)| p.to_coeff_vec(&monos)).collect();
    all.extend(minus_gens.iter().map(|(_, p)| p.to_coeff_vec(&monos)));
    let sums_to_whole = Subspace::from_spanning(dim, all).dim() == dim
        && plus_dims[d as usize] + minus_dims[d as usize] == dim;

    Ok(EigenspaceReport {
        plus_dims,
        minus_dims,
        plus_ok,
        minus_ok,
        sums_to_whole,
    })
}

/// The rank-1 projection polynomial in the variable u = α∨:
/// [(h+δ)(h+δ+2)⋯(h+δ+2(i+j)−2)] · [(h+1)(h+3)⋯(h+2i−1)] with
/// h = u/2 + m_α/2 and δ = m_2α. Degree 2i + j.
pub fn rank1_hc_polynomial(i: u32, j: u32, m_alpha: &Rat, m_2alpha: &Rat) -> UPoly {
    let h = UPoly::new(vec![m_alpha / crate::scalar::rint(2), crate::scalar::rat(1, 2)]);
    let mut out = UPoly::constant(Rat::one());
    for a in 0..(i + j) {
        let c = m_2alpha + crate::scalar::rint(2 * a as i64);
        out = out.mul(&h.add(&UPoly::constant(c)));
    }
    for b in 0..i {
        let c = crate::scalar::rint(2 * b as i64 + 1);
        out = out.mul(&h.add(&UPoly::constant(c)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::polyalg::weyl_act;
    use crate::polyalg::invariant_basis;
    use crate::rootsys::build_root_system;
    use crate::scalar::{rat, rint};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn setup(f: char, r: usize) -> (RootSystem, WeylGroup) {
        let rs = build_root_system(f, r).unwrap();
        let w = WeylGroup::new(&rs);
        (rs, w)
    }

    fn rat_hecke<'a>(
        rs: &'a RootSystem,
        w: &'a WeylGroup,
        ks: &[Rat],
    ) -> HeckeAlgebra<'a, Rat> {
        HeckeAlgebra::new(rs, w, ks.to_vec()).unwrap()
    }

    #[test]
    fn defining_relation_at_the_coroot() {
        // s_α · α∨ = (−α∨) ⊗ s_α − 2k(α)
        for (f, r) in [('A', 1), ('B', 2)] {
            let (rs, w) = setup(f, r);
            let ks: Vec<Rat> = (0..w.root_orbits.len())
                .map(|o| rat(5 + o as i64, 7))
                .collect();
            let h = rat_hecke(&rs, &w, &ks);
            for i in 0..rs.rank {
                let si = HeckeElement::from_group(rs.rank, w.gen_index[i]);
                let cor = HeckeElement::from_poly(h.coroot_poly(i));
                let prod = hecke_mul(&h, &si, &cor).unwrap();
                let mut expected = HeckeElement::zero();
                expected
                    .terms
                    .insert(w.gen_index[i], h.coroot_poly(i).neg());
                expected.terms.insert(
                    0,
                    Poly::constant(rs.rank, -rint(2) * h.k_of_root(i)),
                );
                assert_eq!(prod, expected, "{f}{r} simple {i}");
            }
        }
    }

    #[test]
    fn polynomial_subalgebra_and_group_subalgebra() {
        let (rs, w) = setup('B', 2);
        let h = rat_hecke(&rs, &w, &[rint(1), rint(2)]);
        let f = Poly::<Rat>::var(0, 2).pow(2);
        let g = Poly::<Rat>::var(1, 2).add(&Poly::constant(2, rint(3)));
        let prod = hecke_mul(
            &h,
            &HeckeElement::from_poly(f.clone()),
            &HeckeElement::from_poly(g.clone()),
        )
        .unwrap();
        assert_eq!(prod, HeckeElement::from_poly(f.mul(&g)));
        for i in 0..rs.rank {
            let si = HeckeElement::from_group(rs.rank, w.gen_index[i]);
            assert_eq!(hecke_mul(&h, &si, &si).unwrap(), HeckeElement::one(2));
        }
    }

    #[test]
    fn associativity_on_random_triples() {
        let mut rng = ChaCha20Rng::seed_from_u64(417);
        for (f, r) in [('A', 2), ('B', 2), ('G', 2)] {
            let (rs, w) = setup(f, r);
            let ks: Vec<Rat> = (0..w.root_orbits.len())
                .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                .collect();
            let h = rat_hecke(&rs, &w, &ks);
            let monos = monomials_up_to(2, 2);
            let random_elem = |rng: &mut ChaCha20Rng| {
                let mut e = HeckeElement::zero();
                for _ in 0..2 {
                    let widx = rng.gen_range(0..w.order());
                    let m = monos[rng.gen_range(0..monos.len())].clone();
                    let c = rat(rng.gen_range(-3..=3), 1);
                    if c.is_zero() {
                        continue;
                    }
                    e = e.add(&HeckeElement {
                        terms: BTreeMap::from([(widx, Poly::monomial(m, c))]),
                    });
                }
                e
            };
            for _ in 0..70 {
                let a = random_elem(&mut rng);
                let b = random_elem(&mut rng);
                let c = random_elem(&mut rng);
                let ab_c = hecke_mul(&h, &hecke_mul(&h, &a, &b).unwrap(), &c).unwrap();
                let a_bc = hecke_mul(&h, &a, &hecke_mul(&h, &b, &c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc, "{f}{r}");
            }
        }
    }

    #[test]
    fn star_action_eigenvectors() {
        let (rs, w) = setup('B', 2);
        let h = rat_hecke(&rs, &w, &[rat(3, 4), rat(-1, 2)]);
        for i in 0..rs.rank {
            let coroot = h.coroot_poly(i);
            let v = coroot.add(&Poly::constant(2, h.k_of_root(i).clone()));
            assert_eq!(star_simple(&h, i, &v).unwrap(), v.neg());
            let sq = coroot.mul(&coroot);
            assert_eq!(star_simple(&h, i, &sq).unwrap(), sq);
        }
        // and with the formal parameter
        let hg = HeckeAlgebra::generic(&rs, &w);
        for i in 0..rs.rank {
            let coroot = hg.coroot_poly(i);
            let v = coroot.add(&Poly::constant(2, KRat::k()));
            assert_eq!(star_simple(&hg, i, &v).unwrap(), v.neg());
        }
    }

    #[test]
    fn star_action_is_a_group_action() {
        let (rs, w) = setup('A', 2);
        let h = rat_hecke(&rs, &w, &[rat(2, 3)]);
        // involutions
        for i in 0..rs.rank {
            for m in monomials_up_to(2, 5) {
                let f = Poly::monomial(m, rint(1));
                assert_eq!(
                    star_simple(&h, i, &star_simple(&h, i, &f).unwrap()).unwrap(),
                    f
                );
            }
        }
        // braid relation s0 s1 s0 = s1 s0 s1
        for m in monomials_up_to(2, 4) {
            let f = Poly::monomial(m, rint(1));
            let mut a = f.clone();
            for i in [0, 1, 0] {
                a = star_simple(&h, i, &a).unwrap();
            }
            let mut b = f.clone();
            for i in [1, 0, 1] {
                b = star_simple(&h, i, &b).unwrap();
            }
            assert_eq!(a, b);
        }
        // consistency of sh_act with the longest word
        let w0 = w.longest_element();
        let f = Poly::<Rat>::var(0, 2).pow(2).add(&Poly::var(1, 2));
        let mut g = f.clone();
        for &i in w.elements[w0].word.iter().rev() {
            g = star_simple(&h, i, &g).unwrap();
        }
        assert_eq!(sh_act(&h, w0, &f).unwrap(), g);
    }

    #[test]
    fn fixed_space_equals_classical_invariants() {
        for (f, r, d) in [('A', 2, 4u32), ('B', 2, 4), ('G', 2, 6)] {
            let (rs, w) = setup(f, r);
            for kv in [rint(0), rint(1), rint(-1), rat(3, 5)] {
                let ks = vec![kv.clone(); w.root_orbits.len()];
                let h = rat_hecke(&rs, &w, &ks);
                let fixed = sh_fixed_space(&h, d).unwrap();
                let monos = monomials_up_to(rs.rank, d);
                let fixed_sub = Subspace::from_spanning(
                    monos.len(),
                    fixed.iter().map(|p| p.to_coeff_vec(&monos)).collect(),
                );
                let mut inv_vecs = Vec::new();
                for e in 0..=d {
                    for p in invariant_basis(&w, rs.rank, e) {
                        inv_vecs.push(p.to_coeff_vec(&monos));
                    }
                }
                let inv_sub = Subspace::from_spanning(monos.len(), inv_vecs);
                assert!(fixed_sub.contains_subspace(&inv_sub), "{f}{r} k={kv}");
                assert!(inv_sub.contains_subspace(&fixed_sub), "{f}{r} k={kv}");
            }
        }
    }

    #[test]
    fn zero_parameter_star_action_is_classical() {
        let (rs, w) = setup('B', 2);
        let h = rat_hecke(&rs, &w, &[rint(0), rint(0)]);
        for g in 0..w.order() {
            for m in monomials_up_to(2, 4) {
                let f = Poly::monomial(m, rint(1));
                assert_eq!(sh_act(&h, g, &f).unwrap(), weyl_act(&w, g, &f));
            }
        }
    }

    #[test]
    fn rank_one_eigenspaces() {
        let (rs, w) = setup('A', 1);
        let h = rat_hecke(&rs, &w, &[rat(5, 3)]);
        let rep = eigenspace_check(&h, 0, 3).unwrap();
        assert!(rep.plus_ok && rep.minus_ok && rep.sums_to_whole);
        assert_eq!(rep.plus_dims, vec![1, 1, 2, 2]);
        assert_eq!(rep.minus_dims, vec![0, 1, 1, 2]);
    }

    #[test]
    fn b2_eigenspaces_fill_the_space() {
        let (rs, w) = setup('B', 2);
        let h = rat_hecke(&rs, &w, &[rat(1, 2), rint(2)]);
        for i in 0..rs.rank {
            let rep = eigenspace_check(&h, i, 4).unwrap();
            assert!(rep.plus_ok && rep.minus_ok && rep.sums_to_whole, "simple {i}");
        }
        // k = 0 reduces to the classical ±1 eigenspaces
        let h0 = rat_hecke(&rs, &w, &[rint(0), rint(0)]);
        let rep = eigenspace_check(&h0, 0, 3).unwrap();
        assert!(rep.plus_ok && rep.minus_ok && rep.sums_to_whole);
    }

    #[test]
    fn center_is_the_invariant_ring() {
        let (rs, w) = setup('B', 2);
        let h = rat_hecke(&rs, &w, &[rat(2, 5), rint(3)]);
        let e1 = Poly::<Rat>::var(0, 2);
        let e2 = Poly::<Rat>::var(1, 2);
        let inv = e1.mul(&e1).add(&e2.mul(&e2));
        let rep = center_check(&h, &inv, 6).unwrap();
        assert!(rep.is_central);
        let rep = center_check(&h, &e1, 6).unwrap();
        assert!(!rep.is_central);
        // e1 is fixed by s_{e2} (simple index 1), so the witness is s_{e1−e2}
        assert_eq!(rep.witness, Some(0));
        let rep = center_check(&h, &Poly::constant(2, rint(1)), 6).unwrap();
        assert!(rep.is_central);
    }

    #[test]
    fn rank1_polynomial_agrees_with_the_stated_factors() {
        let m = rint(3);
        let d = rint(2);
        assert_eq!(rank1_hc_polynomial(0, 0, &m, &d), UPoly::constant(rint(1)));
        // h + δ with h = u/2 + 3/2, δ = 2
        let h_plus_d = UPoly::new(vec![rat(3, 2) + rint(2), rat(1, 2)]);
        assert_eq!(rank1_hc_polynomial(0, 1, &m, &d), h_plus_d);
        // (h+δ)(h+1)
        let expect = h_plus_d.mul(&UPoly::new(vec![rat(3, 2) + rint(1), rat(1, 2)]));
        assert_eq!(rank1_hc_polynomial(1, 0, &m, &d), expect);
        for (i, j) in [(1u32, 1u32), (2, 0), (0, 3), (2, 2)] {
            let p = rank1_hc_polynomial(i, j, &m, &d);
            assert_eq!(p.degree(), Some((2 * i + j) as usize));
        }
    }
}
