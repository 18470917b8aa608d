//! The adjoint representation on the filtered pieces U(g)^{≤d} and the
//! generalized Harish-Chandra map on its isotypic components.
//!
//! A copy of V(λ) inside U(g)^{≤d} is pinned down by a highest-weight
//! vector: a weight-λ combination of normal monomials killed by every
//! ad(e_i). Lowering along the skeleton's construction edges materializes
//! the full embedding Ψ, whose intertwining property is then checked
//! against the module's own operators letter by letter. γ̃∘Ψ restricted to
//! the zero weight space is the object the equivariance test probes.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hecke::{sh_act, HeckeAlgebra};
use crate::linalg::Mat;
use crate::polyalg::{monomials_up_to, weyl_act, Mono, Poly};
use crate::repth::{Irrep, ZeroWeightDecomposition};
use crate::rootsys::chevalley::ChevalleyData;
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::RootSystem;
use crate::scalar::Rat;

use super::{gamma_tilde, monomial_weight, pbw_normalize_words, PbwElement, RewriteStrategy};

/// An embedding Ψ: V(λ) → U(g)^{≤d} commuting with the adjoint action,
/// stored as the image of every skeleton basis vector.
#[derive(Clone, Debug)]
pub struct AdIsotypicCopy {
    pub lambda: Vec<Rat>,
    /// Filtration degree: the maximum over all images.
    pub degree: u32,
    /// Image of the g-th global skeleton basis vector.
    pub psi: Vec<PbwElement>,
}

/// Largest d with dim U(g)^{≤d} = C(d + dim g, dim g) still desk-scale.
pub fn max_degree_for(dimg: usize) -> usize {
    let mut d = 0usize;
    while binom(d + 1 + dimg, dimg) <= 600 {
        d += 1;
    }
    d
}

fn binom(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The monomial basis of U(g)^{≤d} with weight bookkeeping.
pub struct UFiltration {
    pub d: usize,
    pub monos: Vec<Mono>,
    pub index: BTreeMap<Mono, usize>,
    pub weights: Vec<Vec<Rat>>,
}

impl UFiltration {
    pub fn new(rs: &RootSystem, cd: &ChevalleyData, d: usize) -> Result<Self> {
        let dimg = cd.dim();
        let cap = max_degree_for(dimg);
        if d > cap {
            return Err(Error::DegreeCapExceeded { degree: d, cap });
        }
        let monos = monomials_up_to(dimg, d as u32);
        let index: BTreeMap<Mono, usize> =
            monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let weights = monos
            .iter()
            .map(|m| monomial_weight(rs, cd, &m.0))
            .collect();
        Ok(UFiltration {
            d,
            monos,
            index,
            weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.monos.len()
    }

    pub fn to_vec(&self, a: &PbwElement) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.monos.len()];
        for (e, c) in &a.terms {
            let i = *self
                .index
                .get(&Mono(e.clone()))
                .expect("element escapes the filtration degree");
            v[i] = c.clone();
        }
        v
    }

    pub fn element(&self, v: &[Rat]) -> PbwElement {
        let nl = self.monos.first().map_or(0, |m| m.0.len());
        let mut out = PbwElement::zero(nl);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(self.monos[i].0.clone(), c.clone());
            }
        }
        out
    }

    /// Indices of the monomials of a given Cartan weight.
    pub fn weight_block(&self, mu: &[Rat]) -> Vec<usize> {
        (0..self.monos.len())
            .filter(|&i| self.weights[i] == mu)
            .collect()
    }

    /// ad(x_l) as sparse columns over the monomial basis. The commutator
    /// never raises the filtration degree, so the result stays inside.
    pub fn ad_columns(&self, cd: &ChevalleyData, l: usize) -> Vec<Vec<(usize, Rat)>> {
        let mut cols = Vec::with_capacity(self.monos.len());
        for m in &self.monos {
            let w = PbwElement::word_of(&m.0);
            let mut left = vec![l];
            left.extend(&w);
            let mut right = w;
            right.push(l);
            let nf = pbw_normalize_words(
                cd,
                vec![(left, Rat::one()), (right, -Rat::one())],
                self.d + 1,
                RewriteStrategy::FirstInversion,
            )
            .expect("cap admits one extra letter");
            let col: Vec<(usize, Rat)> = nf
                .terms
                .into_iter()
                .map(|(e, c)| {
                    let i = *self
                        .index
                        .get(&Mono(e))
                        .expect("ad preserves the filtration");
                    (i, c)
                })
                .collect();
            cols.push(col);
        }
        cols
    }
}

fn sparse_apply(cols: &[Vec<(usize, Rat)>], v: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for (j, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (r, c) in &cols[j] {
            out[*r] += c * x;
        }
    }
    out
}

/// All copies of V(λ) inside U(g)^{≤d}: a basis of Hom_G(V, U(g)^{≤d}).
pub fn hom_copies(
    rs: &RootSystem,
    cd: &ChevalleyData,
    v: &Irrep,
    d: usize,
) -> Result<Vec<AdIsotypicCopy>> {
    let uf = UFiltration::new(rs, cd, d)?;
    let ell = rs.rank;
    let n = cd.n_pos;
    let ad_e: Vec<_> = (0..ell).map(|i| uf.ad_columns(cd, n + ell + i)).collect();
    let ad_f: Vec<_> = (0..ell).map(|i| uf.ad_columns(cd, i)).collect();

    // highest-weight vectors: the joint kernel of the ad(e_i) on the
    // λ-weight block
    let block = uf.weight_block(&v.lambda);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for adcols in &ad_e {
        let mut touched: BTreeMap<usize, usize> = BTreeMap::new();
        for &j in &block {
            for (r, _) in &adcols[j] {
                let next = touched.len();
                touched.entry(*r).or_insert(next);
            }
        }
        let mut m = vec![vec![Rat::zero(); block.len()]; touched.len()];
        for (jj, &j) in block.iter().enumerate() {
            for (r, c) in &adcols[j] {
                m[touched[r]][jj] = c.clone();
            }
        }
        rows.extend(m);
    }
    let hw: Vec<Vec<Rat>> = if rows.is_empty() {
        (0..block.len())
            .map(|j| {
                let mut u = vec![Rat::zero(); block.len()];
                u[j] = Rat::one();
                u
            })
            .collect()
    } else {
        Mat::from_rows(rows).kernel()
    };

    let mut copies = Vec::new();
    for u in hw {
        let mut top = vec![Rat::zero(); uf.dim()];
        for (jj, &j) in block.iter().enumerate() {
            top[j] = u[jj].clone();
        }
        let mut images: Vec<Vec<Rat>> = vec![Vec::new(); v.dim()];
        images[0] = top;
        for g in 1..v.dim() {
            let (parent, i) = v.sk.lowering_edge[g].expect("only the top lacks an edge");
            images[g] = sparse_apply(&ad_f[i], &images[parent], uf.dim());
        }

        // intertwining against the module's own operators, for every
        // simple e, f and every Cartan letter
        for g in 0..v.dim() {
            let mut unit = vec![Rat::zero(); v.dim()];
            unit[g] = Rat::one();
            for i in 0..ell {
                for (letter, adcols) in [(i, &ad_f[i]), (n + ell + i, &ad_e[i])] {
                    let lhs = sparse_apply(adcols, &images[g], uf.dim());
                    let coords = v.ops[letter].apply_vec(&v.sk, &unit);
                    let mut rhs = vec![Rat::zero(); uf.dim()];
                    for (h, c) in coords.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (r, x) in images[h].iter().enumerate() {
                            if !x.is_zero() {
                                rhs[r] += c * x;
                            }
                        }
                    }
                    assert_eq!(lhs, rhs, "Ψ intertwines letter {letter}");
                }
                // Cartan letters act diagonally by the weight
                let mu = v.sk.weight_of(v.sk.basis_weight[g]);
                let pairing = rs.pairing(mu, i);
                let lhs: Vec<Rat> = images[g]
                    .iter()
                    .enumerate()
                    .map(|(r, x)| {
                        if x.is_zero() {
                            Rat::zero()
                        } else {
                            let p = rs.pairing(&uf.weights[r], i);
                            assert_eq!(p, pairing, "Ψ preserves weights");
                            x * &p
                        }
                    })
                    .collect();
                let rhs: Vec<Rat> = images[g].iter().map(|x| x * &pairing).collect();
                assert_eq!(lhs, rhs);
            }
        }

        let psi: Vec<PbwElement> = images.iter().map(|w| uf.element(w)).collect();
        let degree = psi.iter().filter_map(|x| x.degree()).max().unwrap_or(0);
        copies.push(AdIsotypicCopy {
            lambda: v.lambda.clone(),
            degree,
            psi,
        });
    }
    Ok(copies)
}

/// γ̃ ∘ Ψ on the zero weight space: one polynomial per V^h basis vector.
pub fn big_gamma(
    rs: &RootSystem,
    cd: &ChevalleyData,
    v: &Irrep,
    copy: &AdIsotypicCopy,
) -> Vec<Poly<Rat>> {
    let Some(zwi) = v.zero_weight_index() else {
        return Vec::new();
    };
    (0..v.sk.mult[zwi])
        .map(|l| gamma_tilde(rs, cd, &copy.psi[v.sk.global_index(zwi, l)]))
        .collect()
}

/// Whether Ψ maps the whole zero weight space into n̄U(g) + U(g)n — with
/// the PBW order that is a monomial-support condition.
pub fn vh_image_in_complement(cd: &ChevalleyData, v: &Irrep, copy: &AdIsotypicCopy) -> bool {
    let Some(zwi) = v.zero_weight_index() else {
        return true;
    };
    let n = cd.n_pos;
    let ell = cd.rank;
    (0..v.sk.mult[zwi]).all(|l| {
        copy.psi[v.sk.global_index(zwi, l)]
            .terms
            .keys()
            .all(|e| e[..n].iter().any(|&x| x > 0) || e[n + ell..].iter().any(|&x| x > 0))
    })
}

#[derive(Clone, Debug)]
pub struct EquivarianceWitness {
    pub simple: usize,
    pub basis: usize,
    pub lhs: Poly<Rat>,
    pub rhs: Poly<Rat>,
}

#[derive(Clone, Debug)]
pub struct EquivarianceReport {
    pub pass: bool,
    pub psi_is_zero: bool,
    pub witness: Option<EquivarianceWitness>,
}

/// The Hecke-equivariance test for ψ = γ̃∘Ψ|V^h: with every multiplicity
/// set to −1, the ⋆-action of each simple reflection must match the Weyl
/// action on V^h carried over through ψ.
pub fn hecke_equivariance_test(
    rs: &RootSystem,
    cd: &ChevalleyData,
    w: &WeylGroup,
    zdec: &ZeroWeightDecomposition,
    v: &Irrep,
    copy: &AdIsotypicCopy,
) -> Result<EquivarianceReport> {
    let psis = big_gamma(rs, cd, v, copy);
    let psi_is_zero = psis.iter().all(|p| p.is_zero());
    let minus_one = vec![-Rat::one(); w.root_orbits.len()];
    let h = HeckeAlgebra::new(rs, w, minus_one)?;
    for i in 0..rs.rank {
        let s_elt = w.gen_index[i];
        let smat = &zdec.w_mats[s_elt];
        for (j, psi_j) in psis.iter().enumerate() {
            let lhs = sh_act(&h, s_elt, psi_j)?;
            let mut rhs = Poly::zero(rs.rank);
            for l in 0..psis.len() {
                if !smat.at(l, j).is_zero() {
                    rhs = rhs.add(&psis[l].scale(smat.at(l, j)));
                }
            }
            if lhs != rhs {
                return Ok(EquivarianceReport {
                    pass: false,
                    psi_is_zero,
                    witness: Some(EquivarianceWitness {
                        simple: i,
                        basis: j,
                        lhs,
                        rhs,
                    }),
                });
            }
        }
    }
    Ok(EquivarianceReport {
        pass: true,
        psi_is_zero,
        witness: None,
    })
}

/// ψ = 0 must force Ψ = 0 on the span of the computed copies: the matrix
/// of all ψ coefficient vectors has full row rank.
pub fn gamma_injectivity_check(
    rs: &RootSystem,
    cd: &ChevalleyData,
    v: &Irrep,
    copies: &[AdIsotypicCopy],
) -> bool {
    if copies.is_empty() {
        return true;
    }
    let per_copy: Vec<Vec<Poly<Rat>>> = copies
        .iter()
        .map(|c| big_gamma(rs, cd, v, c))
        .collect();
    let maxdeg = per_copy
        .iter()
        .flatten()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0);
    let monos = monomials_up_to(rs.rank, maxdeg);
    let rows: Vec<Vec<Rat>> = per_copy
        .iter()
        .map(|ps| {
            let mut row = Vec::new();
            for p in ps {
                row.extend(p.to_coeff_vec(&monos));
            }
            row
        })
        .collect();
    if rows[0].is_empty() {
        return false;
    }
    Mat::from_rows(rows).rank() == copies.len()
}

#[derive(Clone, Debug)]
pub struct ClassicalHcReport {
    pub center_dim: usize,
    pub images: Vec<Poly<Rat>>,
    pub all_invariant: bool,
    pub independent: bool,
}

/// Classical Harish-Chandra at bounded degree: γ̃ sends the weight-zero
/// ad-invariants of U(g)^{≤d} into S(h)^W, injectively.
pub fn classical_hc_check(
    rs: &RootSystem,
    cd: &ChevalleyData,
    w: &WeylGroup,
    d: usize,
) -> Result<ClassicalHcReport> {
    let uf = UFiltration::new(rs, cd, d)?;
    let ell = rs.rank;
    let n = cd.n_pos;
    let zero = vec![Rat::zero(); ell];
    let block = uf.weight_block(&zero);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..ell {
        for letter in [i, n + ell + i] {
            let cols = uf.ad_columns(cd, letter);
            let mut touched: BTreeMap<usize, usize> = BTreeMap::new();
            for &j in &block {
                for (r, _) in &cols[j] {
                    let next = touched.len();
                    touched.entry(*r).or_insert(next);
                }
            }
            let mut m = vec![vec![Rat::zero(); block.len()]; touched.len()];
            for (jj, &j) in block.iter().enumerate() {
                for (r, c) in &cols[j] {
                    m[touched[r]][jj] = c.clone();
                }
            }
            rows.extend(m);
        }
    }
    let kernel = if rows.is_empty() {
        Mat::<Rat>::identity(block.len()).row_vecs()
    } else {
        Mat::from_rows(rows).kernel()
    };
    let images: Vec<Poly<Rat>> = kernel
        .iter()
        .map(|u| {
            let mut v = vec![Rat::zero(); uf.dim()];
            for (jj, &j) in block.iter().enumerate() {
                v[j] = u[jj].clone();
            }
            gamma_tilde(rs, cd, &uf.element(&v))
        })
        .collect();
    let all_invariant = images
        .iter()
        .all(|p| (0..w.order()).all(|g| weyl_act(w, g, p) == *p));
    let maxdeg = images.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let monos = monomials_up_to(ell, maxdeg);
    let rows: Vec<Vec<Rat>> = images.iter().map(|p| p.to_coeff_vec(&monos)).collect();
    let independent =
        kernel.is_empty() || Mat::from_rows(rows).rank() == kernel.len();
    Ok(ClassicalHcReport {
        center_dim: kernel.len(),
        images,
        all_invariant,
        independent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;
    use crate::repth::chars::character_table;
    use crate::repth::{construct_irrep, zero_weight_decomposition};
    use crate::rootsys::chevalley::build_chevalley;
    use crate::rootsys::build_root_system;
    use crate::scalar::rint;
    use crate::envelop::casimir_element;

    fn setup(fam: char, rank: usize) -> (RootSystem, ChevalleyData, WeylGroup) {
        let rs = build_root_system(fam, rank).unwrap();
        let cd = build_chevalley(&rs).unwrap();
        let w = WeylGroup::new(&rs);
        (rs, cd, w)
    }

    #[test]
    fn trivial_copies_in_low_degree_are_one_and_casimir() {
        let (rs, cd, _) = setup('A', 1);
        let triv = construct_irrep(&rs, &cd, &[rint(0)], 10).unwrap();
        let copies = hom_copies(&rs, &cd, &triv, 2).unwrap();
        assert_eq!(copies.len(), 2);
        let uf = UFiltration::new(&rs, &cd, 2).unwrap();
        let span = Subspace::from_spanning(
            uf.dim(),
            copies.iter().map(|c| uf.to_vec(&c.psi[0])).collect(),
        );
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&uf.to_vec(&PbwElement::one(3))));
        assert!(span.contains(&uf.to_vec(&casimir_element(&cd))));
    }

    #[test]
    fn adjoint_copies_of_sl2() {
        let (rs, cd, _) = setup('A', 1);
        let adj = construct_irrep(&rs, &cd, &[rint(1)], 10).unwrap();
        let copies = hom_copies(&rs, &cd, &adj, 1).unwrap();
        assert_eq!(copies.len(), 1, "degree 1: only the inclusion g ⊂ U(g)");
        // the inclusion, normalized to send the top vector to e
        assert_eq!(copies[0].psi[0], PbwElement::letter(3, 2));
        assert_eq!(copies[0].psi[1], PbwElement::letter(3, 1).neg());
        assert_eq!(copies[0].psi[2], PbwElement::letter(3, 0).scale(&rint(-2)));
        let copies3 = hom_copies(&rs, &cd, &adj, 3).unwrap();
        assert_eq!(copies3.len(), 2, "degree 3 adds the Casimir multiple");
        let degs: Vec<u32> = copies3.iter().map(|c| c.degree).collect();
        assert!(degs.contains(&1) && degs.contains(&3));
    }

    #[test]
    fn big_gamma_of_the_inclusion_is_the_shifted_cartan() {
        let (rs, cd, _) = setup('A', 1);
        let adj = construct_irrep(&rs, &cd, &[rint(1)], 10).unwrap();
        let copies = hom_copies(&rs, &cd, &adj, 1).unwrap();
        let psis = big_gamma(&rs, &cd, &adj, &copies[0]);
        assert_eq!(psis.len(), 1);
        // zero-weight basis vector is [f, e] = −t, so ψ = −(t − 1)
        let mut expect = Poly::linear_rat(&[rint(-2)]);
        expect.add_term(Mono::one(1), rint(1));
        assert_eq!(psis[0], expect);
    }

    #[test]
    fn equivariance_passes_for_small_sl2_modules() {
        let (rs, cd, w) = setup('A', 1);
        let table = character_table(&rs, &w).unwrap();
        for (lam, d) in [(vec![rint(0)], 4), (vec![rint(1)], 3)] {
            let v = construct_irrep(&rs, &cd, &lam, 10).unwrap();
            let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
            let copies = hom_copies(&rs, &cd, &v, d).unwrap();
            assert!(!copies.is_empty());
            for c in &copies {
                let rep = hecke_equivariance_test(&rs, &cd, &w, &zdec, &v, c).unwrap();
                assert!(rep.pass, "λ = {lam:?}, degree {}", c.degree);
            }
            assert!(gamma_injectivity_check(&rs, &cd, &v, &copies));
        }
    }

    #[test]
    fn equivariance_fails_for_the_five_dimensional_sl2_module() {
        let (rs, cd, w) = setup('A', 1);
        let table = character_table(&rs, &w).unwrap();
        let v = construct_irrep(&rs, &cd, &[rint(2)], 10).unwrap();
        let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
        let copies = hom_copies(&rs, &cd, &v, 4).unwrap();
        assert_eq!(copies.len(), 2);
        let mut saw_failure = false;
        for c in &copies {
            let rep = hecke_equivariance_test(&rs, &cd, &w, &zdec, &v, c).unwrap();
            assert_eq!(rep.psi_is_zero, vh_image_in_complement(&cd, &v, c));
            if !rep.psi_is_zero {
                assert!(!rep.pass, "non-small module must break equivariance");
                assert!(rep.witness.is_some());
                saw_failure = true;
            }
        }
        assert!(saw_failure, "some copy has ψ ≠ 0");
        assert!(gamma_injectivity_check(&rs, &cd, &v, &copies));
    }

    #[test]
    fn classical_harish_chandra_sl2() {
        let (rs, cd, w) = setup('A', 1);
        let rep = classical_hc_check(&rs, &cd, &w, 6).unwrap();
        assert_eq!(rep.center_dim, 4, "1, Ω, Ω², Ω³");
        assert!(rep.all_invariant);
        assert!(rep.independent);
    }
}
