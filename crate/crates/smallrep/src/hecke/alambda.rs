//! The |W|-dimensional module A(λ) = S_H(a) / Σ_{f ∈ S(a)^W} (f − f(λ)) S_H(a),
//! realized on the harmonic polynomials, with explicit matrices for the
//! coordinate generators and the simple reflections, and a generated
//! submodule lattice.
//!
//! Reduction to the harmonic basis uses the product decomposition
//! S = S^W ⊗ Harm: a polynomial written as Σ h_j · q_j with q_j invariant
//! reduces to Σ q_j(λ) · h_j modulo the defining ideal, which is exact and
//! needs no Gröbner machinery.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::polyalg::{harmonic_basis, GradedBasis, Poly};
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::RootSystem;
use crate::scalar::{Rat, Scalar};

use super::{star_simple, HeckeAlgebra};

pub struct HeckeModuleAL<S: Scalar> {
    pub lambda: Vec<Rat>,
    pub dim: usize,
    /// Harmonic representatives of the basis, flattened by degree.
    pub basis: Vec<Poly<Rat>>,
    pub basis_degree: Vec<u32>,
    /// Action matrices of the coordinate generators ξ_j = t_j.
    pub xi_mats: Vec<Mat<S>>,
    /// Action matrices of the simple reflections.
    pub s_mats: Vec<Mat<S>>,
    /// Distinct points of the orbit Wλ.
    pub orbit: Vec<Vec<Rat>>,
    /// Whether λ(α∨) avoids {−1, −2, …} on all positive roots, the standing
    /// assumption for the induced-module picture.
    pub weights_avoid_negative_integers: bool,
}

/// Expresses polynomials in the product basis {harmonic · invariant} and
/// evaluates the invariant factors at λ.
struct HarmonicReducer {
    gb: GradedBasis,
    flat: Vec<(u32, usize)>,
    /// per degree d: inverse of the product-basis matrix, and the column
    /// labels (flat harmonic index, invariant evaluated at λ).
    per_degree: Vec<(Mat<Rat>, Vec<(usize, Rat)>)>,
}

impl HarmonicReducer {
    fn new(rs: &RootSystem, w: &WeylGroup, lambda: &[Rat], max_degree: u32) -> Self {
        let gb = harmonic_basis(rs, w, max_degree);
        let mut flat = Vec::new();
        let mut flat_index = BTreeMap::new();
        for (d, hs) in gb.harmonics.iter().enumerate() {
            for j in 0..hs.len() {
                flat_index.insert((d as u32, j), flat.len());
                flat.push((d as u32, j));
            }
        }
        let mut per_degree = Vec::new();
        for d in 0..=max_degree {
            let monos = &gb.monomials[d as usize];
            let mut cols: Vec<Vec<Rat>> = Vec::new();
            let mut labels: Vec<(usize, Rat)> = Vec::new();
            for e in 0..=d {
                for (j, h) in gb.harmonics[e as usize].iter().enumerate() {
                    for q in &gb.invariants[(d - e) as usize] {
                        cols.push(h.mul(q).to_coeff_vec(monos));
                        let lam: Vec<Rat> = lambda.to_vec();
                        labels.push((flat_index[&(e, j)], q.eval(&lam)));
                    }
                }
            }
            let n = monos.len();
            assert_eq!(cols.len(), n, "product basis has the graded dimension");
            let mut m = Mat::<Rat>::zeros(n, n);
            for (c, col) in cols.iter().enumerate() {
                for (r, x) in col.iter().enumerate() {
                    *m.at_mut(r, c) = x.clone();
                }
            }
            let minv = m.inverse().expect("products form a basis");
            per_degree.push((minv, labels));
        }
        HarmonicReducer { gb, flat, per_degree }
    }

    fn dim(&self) -> usize {
        self.flat.len()
    }

    /// Coordinates of f modulo the ideal, over the flat harmonic basis.
    fn reduce<S: Scalar>(&self, f: &Poly<S>) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim()];
        let top = f.degree().unwrap_or(0);
        for d in 0..=top {
            let part = f.homogeneous_part(d);
            if part.is_zero() {
                continue;
            }
            let monos = &self.gb.monomials[d as usize];
            let v = part.to_coeff_vec(monos);
            let (minv, labels) = &self.per_degree[d as usize];
            // c = M⁻¹ v over S
            let n = monos.len();
            for (col, (hidx, qval)) in labels.iter().enumerate() {
                let mut c = S::zero();
                for r in 0..n {
                    let m = minv.at(col, r);
                    if !m.is_zero() {
                        c = c + S::from_rat(m) * v[r].clone();
                    }
                }
                if !c.is_zero() {
                    out[*hidx] = out[*hidx].clone() + c * S::from_rat(qval);
                }
            }
        }
        out
    }
}

/// Π_w (x − (wλ)_j) as coefficients, low degree first.
fn orbit_charpoly<S: Scalar>(w: &WeylGroup, lambda: &[Rat], j: usize) -> Vec<S> {
    let mut coeffs = vec![S::one()];
    for g in 0..w.order() {
        let glam = w.act(g, lambda);
        let root = S::from_rat(&glam[j]);
        // multiply by (x − root)
        let mut next = vec![S::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + c.clone();
            next[i] = next[i].clone() - root.clone() * c.clone();
        }
        coeffs = next;
    }
    coeffs
}

pub fn build_a_lambda<S: Scalar>(
    h: &HeckeAlgebra<S>,
    lambda: &[Rat],
) -> Result<HeckeModuleAL<S>> {
    let rs = h.rs;
    let w = h.w;
    let n = rs.rank;
    let top = rs.n_positive as u32;
    let red = HarmonicReducer::new(rs, w, lambda, top + 1);
    let dim = red.dim();
    assert_eq!(dim, w.order(), "dim A(λ) = |W|");

    let basis: Vec<Poly<Rat>> = red
        .flat
        .iter()
        .map(|&(d, j)| red.gb.harmonics[d as usize][j].clone())
        .collect();
    let basis_degree: Vec<u32> = red.flat.iter().map(|&(d, _)| d).collect();

    let mut xi_mats = Vec::with_capacity(n);
    for j in 0..n {
        let t = Poly::<S>::var(j, n);
        let mut m = Mat::<S>::zeros(dim, dim);
        for (col, b) in basis.iter().enumerate() {
            let prod = t.mul(&b.map_scalar(|r| S::from_rat(r)));
            for (row, c) in red.reduce(&prod).into_iter().enumerate() {
                *m.at_mut(row, col) = c;
            }
        }
        xi_mats.push(m);
    }
    let mut s_mats = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = Mat::<S>::zeros(dim, dim);
        for (col, b) in basis.iter().enumerate() {
            let img = star_simple(h, i, &b.map_scalar(|r| S::from_rat(r)))?;
            for (row, c) in red.reduce(&img).into_iter().enumerate() {
                *m.at_mut(row, col) = c;
            }
        }
        s_mats.push(m);
    }

    // defining relations as matrix identities
    let id = Mat::<S>::identity(dim);
    for i in 0..n {
        assert_eq!(s_mats[i].matmul(&s_mats[i]), id, "s_{i}² = 1 on A(λ)");
        let refl = rs.reflection_matrix(i);
        for j in 0..n {
            // s_i ξ_j = s_i(ξ_j) s_i − k_i α_i(ξ_j)
            let lhs = s_mats[i].matmul(&xi_mats[j]);
            let mut sxi = Mat::<S>::zeros(dim, dim);
            for l in 0..n {
                let c = refl.at(j, l);
                if !c.is_zero() {
                    sxi = sxi.add(&xi_mats[l].scale(&S::from_rat(c)));
                }
            }
            let pairing = S::from_rat(&rs.roots[i][j]);
            let rhs = sxi
                .matmul(&s_mats[i])
                .sub(&id.scale(&(h.k_of_root(i).clone() * pairing)));
            assert_eq!(lhs, rhs, "defining relation at (s_{i}, ξ_{j})");
        }
    }
    // braid relations
    for i in 0..n {
        for j in (i + 1)..n {
            let m_ord = match rs.cartan[i][j] * rs.cartan[j][i] {
                0 => 2,
                1 => 3,
                2 => 4,
                3 => 6,
                other => panic!("unexpected Cartan product {other}"),
            };
            let mut a = id.clone();
            let mut b = id.clone();
            for t in 0..m_ord {
                let (x, y) = if t % 2 == 0 { (i, j) } else { (j, i) };
                a = a.matmul(&s_mats[x]);
                b = b.matmul(&s_mats[y]);
            }
            assert_eq!(a, b, "braid relation on A(λ)");
        }
    }
    // joint generalized spectrum {wλ}
    for j in 0..n {
        assert_eq!(
            xi_mats[j].charpoly(),
            orbit_charpoly::<S>(w, lambda, j),
            "spectrum of ξ_{j} is the W-orbit of λ"
        );
    }

    let avoid = rs.positive_indices().all(|p| {
        let v = crate::rootsys::dot(lambda, rs.coroot_form(p));
        !(v.is_integer() && v < Rat::zero())
    });

    let mut orbit: Vec<Vec<Rat>> = Vec::new();
    for g in 0..w.order() {
        let glam = w.act(g, lambda);
        if !orbit.contains(&glam) {
            orbit.push(glam);
        }
    }
    orbit.sort();

    Ok(HeckeModuleAL {
        lambda: lambda.to_vec(),
        dim,
        basis,
        basis_degree,
        xi_mats,
        s_mats,
        orbit,
        weights_avoid_negative_integers: avoid,
    })
}

#[derive(Clone, Debug)]
pub struct LatticeReport {
    /// Dimensions of the generated submodules, sorted consistently with
    /// `hasse` indices.
    pub dims: Vec<usize>,
    /// Covering pairs (i, j): submodule i is a maximal proper submodule
    /// of submodule j.
    pub hasse: Vec<(usize, usize)>,
    /// True when every generalized weight space is one-dimensional, which
    /// guarantees the generated family is the full submodule lattice.
    pub complete: bool,
    pub irreducible: bool,
    pub weight_values: Vec<Vec<Rat>>,
    pub weight_space_dims: Vec<usize>,
}

fn spin_up(m: &HeckeModuleAL<Rat>, seed: &[Rat]) -> Subspace<Rat> {
    let dim = m.dim;
    let ops: Vec<&Mat<Rat>> = m.xi_mats.iter().chain(m.s_mats.iter()).collect();
    let mut space = Subspace::from_spanning(dim, vec![seed.to_vec()]);
    let mut queue: Vec<Vec<Rat>> = vec![seed.to_vec()];
    while let Some(v) = queue.pop() {
        for op in &ops {
            let img = op.mul_vec(&v);
            if !space.contains(&img) {
                space = space.sum(&Subspace::from_spanning(dim, vec![img.clone()]));
                queue.push(img);
            }
        }
    }
    space
}

fn canonical_key(s: &Subspace<Rat>) -> Vec<Rat> {
    let mut key = Vec::new();
    for b in s.basis() {
        key.extend(b.iter().cloned());
    }
    key
}

pub fn submodule_lattice(m: &HeckeModuleAL<Rat>) -> Result<LatticeReport> {
    if m.dim > 48 {
        return Err(Error::Invalid(format!(
            "submodule lattice limited to dim ≤ 48, got {}",
            m.dim
        )));
    }
    let dim = m.dim;
    let weight_values = m.orbit.clone();

    // generalized weight spaces: ∩_j ker (ξ_j − μ_j)^{dim}
    let mut weight_space_dims = Vec::new();
    let mut seeds: Vec<Vec<Rat>> = Vec::new();
    let mut all_one_dimensional = true;
    for mu in &weight_values {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for (j, xj) in m.xi_mats.iter().enumerate() {
            let shifted = xj.sub(&Mat::identity(dim).scale(&mu[j]));
            let mut pw = Mat::<Rat>::identity(dim);
            for _ in 0..dim {
                pw = pw.matmul(&shifted);
            }
            rows.extend(pw.row_vecs());
        }
        let ker = Mat::from_rows(rows).kernel();
        weight_space_dims.push(ker.len());
        if ker.len() != 1 {
            all_one_dimensional = false;
        }
        seeds.extend(ker);
    }
    assert_eq!(
        weight_space_dims.iter().sum::<usize>(),
        dim,
        "generalized weight spaces fill A(λ)"
    );

    // generated family: spin-ups, then closure under sum and intersection
    let mut family: BTreeMap<Vec<Rat>, Subspace<Rat>> = BTreeMap::new();
    let zero = Subspace::<Rat>::zero(dim);
    let full = Subspace::from_spanning(dim, Mat::<Rat>::identity(dim).row_vecs());
    family.insert(canonical_key(&zero), zero);
    family.insert(canonical_key(&full), full);
    for s in &seeds {
        let sub = spin_up(m, s);
        family.insert(canonical_key(&sub), sub);
    }
    loop {
        let snapshot: Vec<Subspace<Rat>> = family.values().cloned().collect();
        let before = family.len();
        for a in 0..snapshot.len() {
            for b in (a + 1)..snapshot.len() {
                for cand in [snapshot[a].sum(&snapshot[b]), snapshot[a].intersect(&snapshot[b])] {
                    family.entry(canonical_key(&cand)).or_insert(cand);
                }
            }
        }
        if family.len() == before {
            break;
        }
        if family.len() > 4096 {
            return Err(Error::Invalid(
                "submodule closure exceeded 4096 subspaces".into(),
            ));
        }
    }

    let mut subs: Vec<Subspace<Rat>> = family.into_values().collect();
    subs.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| canonical_key(a).cmp(&canonical_key(b))));
    let dims: Vec<usize> = subs.iter().map(|s| s.dim()).collect();
    let mut hasse = Vec::new();
    for i in 0..subs.len() {
        for j in 0..subs.len() {
            if i == j || subs[i].dim() >= subs[j].dim() || !subs[j].contains_subspace(&subs[i]) {
                continue;
            }
            let intermediate = (0..subs.len()).any(|k| {
                k != i
                    && k != j
                    && subs[k].dim() > subs[i].dim()
                    && subs[k].dim() < subs[j].dim()
                    && subs[j].contains_subspace(&subs[k])
                    && subs[k].contains_subspace(&subs[i])
            });
            if !intermediate {
                hasse.push((i, j));
            }
        }
    }

    Ok(LatticeReport {
        irreducible: dims.len() == 2,
        dims,
        hasse,
        complete: all_one_dimensional,
        weight_values,
        weight_space_dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::scalar::{rat, rint, KRat};

    fn setup(f: char, r: usize) -> (RootSystem, WeylGroup) {
        let rs = build_root_system(f, r).unwrap();
        let w = WeylGroup::new(&rs);
        (rs, w)
    }

    #[test]
    fn rank_one_at_the_origin_is_irreducible() {
        let (rs, w) = setup('A', 1);
        let h = HeckeAlgebra::new(&rs, &w, vec![rint(-1)]).unwrap();
        // λ(α∨) = 0 in the simple-root coordinate
        let m = build_a_lambda(&h, &[rint(0)]).unwrap();
        assert_eq!(m.dim, 2);
        let lat = submodule_lattice(&m).unwrap();
        assert!(lat.irreducible);
        assert_eq!(lat.dims, vec![0, 2]);
    }

    #[test]
    fn rank_one_resonant_point_has_a_line() {
        let (rs, w) = setup('A', 1);
        let h = HeckeAlgebra::new(&rs, &w, vec![rint(-1)]).unwrap();
        // λ(α∨) = 1 ⇔ coordinate 1/2
        let m = build_a_lambda(&h, &[rat(1, 2)]).unwrap();
        let lat = submodule_lattice(&m).unwrap();
        assert!(!lat.irreducible);
        assert_eq!(lat.dims, vec![0, 1, 2]);
        assert_eq!(lat.hasse, vec![(0, 1), (1, 2)]);
        assert!(lat.complete, "regular spectrum at λ ≠ 0");
    }

    #[test]
    fn b2_regular_nonresonant_is_irreducible() {
        let (rs, w) = setup('B', 2);
        let h = HeckeAlgebra::new(&rs, &w, vec![rint(-1), rint(-1)]).unwrap();
        // λ = (3, 1): all λ(α∨) ∈ {2, 6, 4, 2} avoid 1
        let m = build_a_lambda(&h, &[rint(3), rint(1)]).unwrap();
        assert_eq!(m.dim, 8);
        let lat = submodule_lattice(&m).unwrap();
        assert!(lat.irreducible, "dims found: {:?}", lat.dims);
        assert!(lat.complete);
    }

    #[test]
    fn g2_dimension_and_spectrum() {
        let (rs, w) = setup('G', 2);
        let h = HeckeAlgebra::new(&rs, &w, vec![rint(-1), rint(-1)]).unwrap();
        let m = build_a_lambda(&h, &[rat(7, 3), rat(1, 5)]).unwrap();
        assert_eq!(m.dim, 12);
        assert!(m.weights_avoid_negative_integers);
    }

    #[test]
    fn generic_parameter_module_builds() {
        let (rs, w) = setup('A', 2);
        let h = HeckeAlgebra::<KRat>::generic(&rs, &w);
        let m = build_a_lambda(&h, &[rint(1), rint(2)]).unwrap();
        assert_eq!(m.dim, 6);
    }
}
