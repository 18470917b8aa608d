//! Graded comparison on the symmetric algebra S(g): for each degree,
//! dim Hom_G(V, S^d(g)), the dimension of its restriction-to-h image inside
//! Hom_W(V^h, S^d(h)), and the dimension of that target space. Restriction
//! is injective; it hits everything exactly when twice a root never occurs
//! among the weights of V, and the first degree where the image falls short
//! is reported otherwise.
//!
//! S(g) is a polynomial ring in one variable per basis letter; the adjoint
//! action differentiates: ad(x)·m = Σ_l m_l z^{m − ε_l} [x, z_l].

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::linalg::Mat;
use crate::polyalg::{monomials_of_degree, weyl_act, Mono, Poly};
use crate::repth::{is_small, Irrep, ZeroWeightDecomposition};
use crate::rootsys::chevalley::ChevalleyData;
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::RootSystem;
use crate::scalar::{rint, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymDegreeRow {
    pub degree: u32,
    pub hom_g: usize,
    pub image: usize,
    pub hom_w: usize,
}

#[derive(Clone, Debug)]
pub struct SymGradedReport {
    pub small: bool,
    pub rows: Vec<SymDegreeRow>,
    /// First degree with image strictly below the target, if any.
    pub first_gap: Option<u32>,
}

/// ad(x_letter) on degree-homogeneous monomials of S(g), as sparse columns.
fn ad_sym_columns(
    cd: &ChevalleyData,
    monos: &[Mono],
    index: &BTreeMap<Mono, usize>,
    letter: usize,
) -> Vec<Vec<(usize, Rat)>> {
    let mut cols = Vec::with_capacity(monos.len());
    for m in monos {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (l, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (j, c) in cd.bracket(letter, l) {
                let mut exp = m.0.clone();
                exp[l] -= 1;
                exp[j] += 1;
                let i = index[&Mono(exp)];
                let entry = acc.entry(i).or_insert_with(Rat::zero);
                *entry += c * rint(e as i64);
            }
        }
        cols.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    }
    cols
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

/// Trace of each Weyl element on S^deg(h).
fn sym_h_traces(w: &WeylGroup, rank: usize, deg: u32) -> Vec<Rat> {
    let monos = monomials_of_degree(rank, deg);
    (0..w.order())
        .map(|e| {
            let mut tr = Rat::zero();
            for m in &monos {
                let p = Poly::monomial(m.clone(), Rat::one());
                tr += weyl_act(w, e, &p).coeff(m);
            }
            tr
        })
        .collect()
}

pub fn sym_hom_copies(
    rs: &RootSystem,
    cd: &ChevalleyData,
    w: &WeylGroup,
    zdec: &ZeroWeightDecomposition,
    v: &Irrep,
    d: u32,
) -> Result<SymGradedReport> {
    let dimg = cd.dim();
    let ell = rs.rank;
    let n = cd.n_pos;
    let small = is_small(rs, &v.lambda)?;
    let m0 = v.zero_weight_index().map_or(0, |zwi| v.sk.mult[zwi]);
    let vh_traces: Vec<Rat> = zdec
        .w_mats
        .iter()
        .map(|m| (0..m.rows).fold(Rat::zero(), |acc, i| acc + m.at(i, i)))
        .collect();

    let mut rows = Vec::new();
    for deg in 0..=d {
        let monos = monomials_of_degree(dimg, deg);
        let index: BTreeMap<Mono, usize> =
            monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let weights: Vec<Vec<Rat>> = monos
            .iter()
            .map(|m| super::monomial_weight(rs, cd, &m.0))
            .collect();
        let ad_e: Vec<_> = (0..ell)
            .map(|i| ad_sym_columns(cd, &monos, &index, n + ell + i))
            .collect();
        let ad_f: Vec<_> = (0..ell)
            .map(|i| ad_sym_columns(cd, &monos, &index, i))
            .collect();

        let block: Vec<usize> = (0..monos.len())
            .filter(|&i| weights[i] == v.lambda)
            .collect();
        let mut krows: Vec<Vec<Rat>> = Vec::new();
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
            krows.extend(m);
        }
        let hw: Vec<Vec<Rat>> = if block.is_empty() {
            Vec::new()
        } else if krows.is_empty() {
            Mat::<Rat>::identity(block.len()).row_vecs()
        } else {
            Mat::from_rows(krows).kernel()
        };
        let hom_g = hw.len();

        // lower each highest vector through the skeleton edges, restrict
        // the zero-weight images to h
        let h_monos = monomials_of_degree(ell, deg);
        let mut image_rows: Vec<Vec<Rat>> = Vec::new();
        for u in &hw {
            let mut images: Vec<Vec<Rat>> = vec![Vec::new(); v.dim()];
            let mut top = vec![Rat::zero(); monos.len()];
            for (jj, &j) in block.iter().enumerate() {
                top[j] = u[jj].clone();
            }
            images[0] = top;
            for g in 1..v.dim() {
                let (parent, i) = v.sk.lowering_edge[g].expect("only the top lacks an edge");
                images[g] = sparse_apply(&ad_f[i], &images[parent], monos.len());
            }
            for (g, img) in images.iter().enumerate() {
                let mu = v.sk.weight_of(v.sk.basis_weight[g]);
                for (i, c) in img.iter().enumerate() {
                    assert!(c.is_zero() || weights[i] == *mu, "lowering preserves weights");
                }
            }
            let Some(zwi) = v.zero_weight_index() else {
                continue;
            };
            let coroot: Vec<Poly<Rat>> = (0..ell)
                .map(|i| Poly::linear_rat(rs.coroot_form(i)))
                .collect();
            let mut row = Vec::new();
            for l in 0..m0 {
                let img = &images[v.sk.global_index(zwi, l)];
                let mut p = Poly::zero(ell);
                for (i, c) in img.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let exp = &monos[i].0;
                    if exp[..n].iter().any(|&x| x > 0) || exp[n + ell..].iter().any(|&x| x > 0) {
                        continue;
                    }
                    let mut term = Poly::constant(ell, c.clone());
                    for (i2, cr) in coroot.iter().enumerate() {
                        if exp[n + i2] > 0 {
                            term = term.mul(&cr.pow(exp[n + i2]));
                        }
                    }
                    p = p.add(&term);
                }
                row.extend(p.to_coeff_vec(&h_monos));
            }
            image_rows.push(row);
        }
        let image = if image_rows.is_empty() || image_rows[0].is_empty() {
            0
        } else {
            Mat::from_rows(image_rows).rank()
        };
        assert_eq!(image, hom_g, "restriction to h is injective");

        // dim Hom_W(V^h, S^deg(h)) by characters
        let straces = sym_h_traces(w, ell, deg);
        let mut acc = Rat::zero();
        for e in 0..w.order() {
            acc += &vh_traces[e] * &straces[e];
        }
        let order = rint(w.order() as i64);
        let hom_w_rat = acc / order;
        assert!(hom_w_rat.is_integer(), "character inner product is integral");
        let hom_w = usize::try_from(hom_w_rat.to_integer()).expect("nonnegative count");

        if small {
            assert_eq!(image, hom_w, "small module: restriction is onto in degree {deg}");
        }
        rows.push(SymDegreeRow {
            degree: deg,
            hom_g,
            image,
            hom_w,
        });
    }
    let first_gap = rows.iter().find(|r| r.image < r.hom_w).map(|r| r.degree);
    Ok(SymGradedReport {
        small,
        rows,
        first_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repth::chars::character_table;
    use crate::repth::{construct_irrep, zero_weight_decomposition};
    use crate::rootsys::chevalley::build_chevalley;
    use crate::rootsys::build_root_system;

    fn run(lam: i64, d: u32) -> SymGradedReport {
        let rs = build_root_system('A', 1).unwrap();
        let cd = build_chevalley(&rs).unwrap();
        let w = WeylGroup::new(&rs);
        let table = character_table(&rs, &w).unwrap();
        let v = construct_irrep(&rs, &cd, &[rint(lam)], 20).unwrap();
        let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
        sym_hom_copies(&rs, &cd, &w, &zdec, &v, d).unwrap()
    }

    #[test]
    fn chevalley_restriction_for_the_trivial_module() {
        let rep = run(0, 5);
        assert!(rep.small);
        assert_eq!(rep.first_gap, None);
        // invariants of S(sl2) restrict onto the even polynomials in h
        let hom_gs: Vec<usize> = rep.rows.iter().map(|r| r.hom_g).collect();
        assert_eq!(hom_gs, vec![1, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn adjoint_module_restricts_onto_the_target() {
        let rep = run(1, 5);
        assert!(rep.small);
        assert_eq!(rep.first_gap, None);
        for r in &rep.rows {
            assert_eq!(r.image, r.hom_w);
        }
    }

    #[test]
    fn five_dimensional_module_shows_a_gap() {
        let rep = run(2, 4);
        assert!(!rep.small);
        let gap = rep.first_gap.expect("a strict gap must appear");
        assert!(gap <= 4);
        // degree 0: no invariant maps out of a nontrivial module, but the
        // sign of the reflection on V^h is +1 so the target is 1-dim
        assert_eq!(rep.rows[0].hom_g, 0);
        assert_eq!(rep.rows[0].hom_w, 1);
        assert_eq!(gap, 0);
    }
}
