//! Construction of the irreducible highest-weight module V(λ) from its
//! weight skeleton, using only the simple raising/lowering operators and
//! the contravariant form.
//!
//! Weights are processed by depth (height of λ − μ). At each new weight
//! the candidate vectors are `f_i · (basis of μ + α_i)`; their Gram matrix
//! under the contravariant form S — computable entirely from already-known
//! blocks via S(f_i u, c) = S(u, e_i c) — determines the multiplicity, a
//! pivot basis, and the expansion of the rejected candidates. Since S is
//! nondegenerate on every weight space of an irreducible module, equality
//! of Gram columns is equality of vectors.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rootsys::RootSystem;
use crate::scalar::Rat;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub struct HwSkeleton {
    pub lambda: Vec<Rat>,
    pub weights: Vec<Vec<Rat>>,
    pub weight_index: BTreeMap<Vec<Rat>, usize>,
    pub mult: Vec<usize>,
    pub basis_offset: Vec<usize>,
    /// Weight index of each global basis vector.
    pub basis_weight: Vec<usize>,
    pub dim: usize,
    /// Per simple i: matrices of e_i keyed by source weight index
    /// (block shape mult(μ+α_i) × mult(μ); absent = zero).
    pub e_blocks: Vec<BTreeMap<usize, Mat<Rat>>>,
    /// Per simple i: matrices of f_i keyed by source weight index.
    pub f_blocks: Vec<BTreeMap<usize, Mat<Rat>>>,
    /// Per global basis vector: the (parent basis vector, simple i) it was
    /// obtained from by lowering; `None` exactly for the highest vector.
    pub lowering_edge: Vec<Option<(usize, usize)>>,
    /// Contravariant Gram matrix per weight space.
    pub gram: Vec<Mat<Rat>>,
}

impl HwSkeleton {
    pub fn global_index(&self, wi: usize, local: usize) -> usize {
        self.basis_offset[wi] + local
    }

    pub fn weight_of(&self, wi: usize) -> &[Rat] {
        &self.weights[wi]
    }

    pub fn index_of_weight(&self, w: &[Rat]) -> Option<usize> {
        self.weight_index.get(w).copied()
    }
}

pub(crate) fn shift(w: &[Rat], root: &[Rat], sign: i64) -> Vec<Rat> {
    w.iter()
        .zip(root)
        .map(|(a, b)| {
            if sign >= 0 {
                a + b
            } else {
                a - b
            }
        })
        .collect()
}

/// Dense matrix of the simple operator e_i (`raise`) or f_i on the whole
/// module, assembled from the weight blocks.
pub fn dense_simple_operator(rs: &RootSystem, sk: &HwSkeleton, i: usize, raise: bool) -> Mat<Rat> {
    let blocks = if raise { &sk.e_blocks[i] } else { &sk.f_blocks[i] };
    let mut m = Mat::<Rat>::zeros(sk.dim, sk.dim);
    for (&src, block) in blocks {
        let tgt_w = shift(&sk.weights[src], &rs.roots[i], if raise { 1 } else { -1 });
        let tgt = sk.index_of_weight(&tgt_w).unwrap();
        for r in 0..block.rows {
            for c in 0..block.cols {
                *m.at_mut(sk.global_index(tgt, r), sk.global_index(src, c)) =
                    block.at(r, c).clone();
            }
        }
    }
    m
}

/// Dense diagonal matrix of the Cartan element α_i∨.
pub fn dense_cartan(rs: &RootSystem, sk: &HwSkeleton, i: usize) -> Mat<Rat> {
    let mut m = Mat::<Rat>::zeros(sk.dim, sk.dim);
    for g in 0..sk.dim {
        *m.at_mut(g, g) = rs.pairing(&sk.weights[sk.basis_weight[g]], i);
    }
    m
}

pub fn build_skeleton(rs: &RootSystem, lambda: &[Rat], dim_cap: usize) -> Result<HwSkeleton> {
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::NotDominantIntegral(format!("{lambda:?}")));
    }
    let ell = rs.rank;

    let mut sk = HwSkeleton {
        lambda: lambda.to_vec(),
        weights: vec![lambda.to_vec()],
        weight_index: BTreeMap::from([(lambda.to_vec(), 0usize)]),
        mult: vec![1],
        basis_offset: vec![0],
        basis_weight: vec![0],
        dim: 1,
        e_blocks: vec![BTreeMap::new(); ell],
        f_blocks: vec![BTreeMap::new(); ell],
        lowering_edge: vec![None],
        gram: vec![Mat::from_rows(vec![vec![Rat::one()]])],
    };

    let mut frontier: BTreeSet<Vec<Rat>> = (0..ell)
        .map(|i| shift(lambda, &rs.roots[i], -1))
        .collect();

    while !frontier.is_empty() {
        let mut next: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for mu in frontier {
            // candidates (i, b): f_i applied to basis vector b of μ + α_i
            let mut cands: Vec<(usize, usize, usize)> = Vec::new(); // (i, parent wi, b)
            for i in 0..ell {
                let parent = shift(&mu, &rs.roots[i], 1);
                if let Some(&pi) = sk.weight_index.get(&parent) {
                    for b in 0..sk.mult[pi] {
                        cands.push((i, pi, b));
                    }
                }
            }
            if cands.is_empty() {
                continue;
            }

            // e_j images of every candidate, one vector per simple j with
            // μ + α_j a known weight
            let mut cand_e: Vec<Vec<Option<Vec<Rat>>>> = vec![Vec::new(); ell];
            for j in 0..ell {
                let tau = shift(&mu, &rs.roots[j], 1);
                let ti = sk.weight_index.get(&tau).copied();
                for &(i, pi, b) in &cands {
                    let img = match ti {
                        None => None,
                        Some(ti) => {
                            let mut x = vec![Rat::zero(); sk.mult[ti]];
                            // f_i(e_j u_b): climb to χ = parent + α_j, come back down
                            let chi = shift(&sk.weights[pi], &rs.roots[j], 1);
                            if let Some(&ci) = sk.weight_index.get(&chi) {
                                if let Some(eb) = sk.e_blocks[j].get(&pi) {
                                    let y = eb.col(b);
                                    if let Some(fb) = sk.f_blocks[i].get(&ci) {
                                        let z = fb.mul_vec(&y);
                                        for (xs, zs) in x.iter_mut().zip(&z) {
                                            *xs += zs;
                                        }
                                    }
                                }
                            }
                            if j == i {
                                // [e_i, f_i] = α_i∨ acting on the parent vector
                                x[b] += rs.pairing(&sk.weights[pi], j);
                            }
                            Some(x)
                        }
                    };
                    cand_e[j].push(img);
                }
            }

            // Gram matrix of the candidates: S(c1, c2) = S(u_{b1}, e_{i1} c2)
            let nc = cands.len();
            let mut g = Mat::<Rat>::zeros(nc, nc);
            for (c2, _) in cands.iter().enumerate() {
                for (c1, &(i1, p1, b1)) in cands.iter().enumerate() {
                    let e_img = cand_e[i1][c2]
                        .as_ref()
                        .expect("μ + α_{i1} is a weight (it is a candidate parent)");
                    let mut acc = Rat::zero();
                    for (t, v) in e_img.iter().enumerate() {
                        acc += sk.gram[p1].at(b1, t) * v;
                    }
                    *g.at_mut(c1, c2) = acc;
                }
            }
            for a in 0..nc {
                for b in 0..a {
                    assert_eq!(g.at(a, b), g.at(b, a), "contravariant form not symmetric");
                }
            }

            let mut r = g.clone();
            let pivots = r.rref();
            let m = pivots.len();
            if m == 0 {
                continue; // not a weight of V(λ)
            }
            sk.dim += m;
            if sk.dim > dim_cap {
                return Err(Error::DimensionCapExceeded {
                    dim: sk.dim as u64,
                    cap: dim_cap as u64,
                });
            }

            let wi = sk.weights.len();
            sk.weights.push(mu.clone());
            sk.weight_index.insert(mu.clone(), wi);
            sk.mult.push(m);
            sk.basis_offset.push(sk.basis_weight.len());
            for &c in &pivots {
                let (i, pi, b) = cands[c];
                sk.basis_weight.push(wi);
                sk.lowering_edge
                    .push(Some((sk.global_index(pi, b), i)));
            }

            // expansion of every candidate over the pivot basis
            let pivot_pos: BTreeMap<usize, usize> =
                pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
            let expansion = |c: usize| -> Vec<Rat> {
                if let Some(&r0) = pivot_pos.get(&c) {
                    let mut v = vec![Rat::zero(); m];
                    v[r0] = Rat::one();
                    v
                } else {
                    (0..m).map(|r0| r.at(r0, c).clone()).collect()
                }
            };

            // f-blocks into μ, grouped per simple i
            for i in 0..ell {
                let parent = shift(&mu, &rs.roots[i], 1);
                let Some(&pi) = sk.weight_index.get(&parent) else {
                    continue;
                };
                let mut fb = Mat::<Rat>::zeros(m, sk.mult[pi]);
                for (c, &(ci, _, b)) in cands.iter().enumerate() {
                    if ci != i {
                        continue;
                    }
                    for (r0, v) in expansion(c).into_iter().enumerate() {
                        *fb.at_mut(r0, b) = v;
                    }
                }
                sk.f_blocks[i].insert(pi, fb);
            }

            // e-blocks out of μ (columns = pivot candidates)
            for j in 0..ell {
                let tau = shift(&mu, &rs.roots[j], 1);
                let Some(&ti) = sk.weight_index.get(&tau) else {
                    continue;
                };
                let mut eb = Mat::<Rat>::zeros(sk.mult[ti], m);
                for (r0, &c) in pivots.iter().enumerate() {
                    let img = cand_e[j][c].as_ref().unwrap();
                    for (t, v) in img.iter().enumerate() {
                        *eb.at_mut(t, r0) = v.clone();
                    }
                }
                sk.e_blocks[j].insert(wi, eb);
            }

            // Gram of the new weight space
            let mut gram = Mat::<Rat>::zeros(m, m);
            for (r0, &c0) in pivots.iter().enumerate() {
                for (r1, &c1) in pivots.iter().enumerate() {
                    *gram.at_mut(r0, r1) = g.at(c0, c1).clone();
                }
            }
            sk.gram.push(gram);

            for j in 0..ell {
                next.insert(shift(&mu, &rs.roots[j], -1));
            }
        }
        frontier = next;
    }

    Ok(sk)
}
