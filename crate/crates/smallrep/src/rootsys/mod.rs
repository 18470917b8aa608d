//! Finite crystallographic root systems of types A–G, rank ≤ 4, in exact
//! rational coordinates.
//!
//! Coordinates. Types B, C, D, F are realized in the classical orthonormal
//! `e_i` coordinates, so e.g. B2 has positive roots `e1−e2, e2, e1, e1+e2`.
//! Types A and G have no rational orthonormal basis of the root span, so
//! they are realized on the span with the simple roots as the coordinate
//! basis; the inner product is carried explicitly by a Gram matrix. The
//! classical ambient dimension is kept as metadata.
//!
//! Normalization. `gram_std` scales the form so long roots have squared
//! length 2. `gram_killing = gram_std / (2 h∨)` is the form induced on the
//! dual Cartan by the Killing form (cross-checked elsewhere against traces
//! in the adjoint representation).

pub mod chevalley;
pub mod mult;
pub mod weyl;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::{rat, rint, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: char,
    pub rank: usize,
    /// Dimension of the classical realization (metadata; all coordinates
    /// in this struct live in `rank` dimensions).
    pub ambient_dim: usize,
    /// All roots: positives first (simple roots at indices `0..rank`,
    /// remaining positives sorted lexicographically), then the negatives
    /// with `roots[n_positive + i] = -roots[i]`.
    pub roots: Vec<Vec<Rat>>,
    pub n_positive: usize,
    /// Indices of the simple roots (always `0..rank`).
    pub simple: Vec<usize>,
    /// Cartan matrix, `cartan[i][j] = α_i(α_j∨)`.
    pub cartan: Vec<Vec<i64>>,
    pub gram_std: Mat<Rat>,
    pub gram_killing: Mat<Rat>,
    pub dual_coxeter: i64,
    /// Per root: coefficients of the coroot `α∨` as a linear form on the
    /// coordinate space, i.e. `λ(α∨) = dot(λ, coroot_form[α])`.
    coroot_forms: Vec<Vec<Rat>>,
    /// Per root: expansion in the simple roots (integer entries).
    simple_coeffs: Vec<Vec<Rat>>,
    index_of: BTreeMap<Vec<Rat>, usize>,
}

fn e(i: usize, n: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x.clone()).collect()
}

fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Build the root system of the given family and rank.
///
/// Errors with [`Error::UnsupportedType`] when `(family, rank)` is not a
/// finite type of rank ≤ 4 (E types start at rank 6, D at rank 3).
pub fn build_root_system(family: char, rank: usize) -> Result<RootSystem> {
    let n = rank;
    let unsupported = || Error::UnsupportedType { family, rank };
    let ok = matches!(
        (family, n),
        ('A', 1..=4) | ('B', 2..=4) | ('C', 2..=4) | ('D', 3..=4) | ('F', 4) | ('G', 2)
    );
    if !ok {
        return Err(unsupported());
    }

    let mut positives: Vec<Vec<Rat>> = Vec::new();
    let mut simple: Vec<Vec<Rat>> = Vec::new();
    let mut gram = Mat::<Rat>::zeros(n, n);
    let ambient_dim;

    match family {
        'A' => {
            // simple-root coordinates; Gram = symmetrized Cartan matrix
            ambient_dim = n + 1;
            for i in 0..n {
                simple.push(e(i, n));
                *gram.at_mut(i, i) = rint(2);
                if i + 1 < n {
                    *gram.at_mut(i, i + 1) = rint(-1);
                    *gram.at_mut(i + 1, i) = rint(-1);
                }
            }
            // e_i - e_j (i < j) = α_i + ... + α_{j-1}
            for i in 0..n + 1 {
                for j in i + 1..n + 1 {
                    let mut v = vec![Rat::zero(); n];
                    for item in v.iter_mut().take(j).skip(i) {
                        *item = Rat::one();
                    }
                    positives.push(v);
                }
            }
        }
        'B' => {
            ambient_dim = n;
            gram = Mat::identity(n);
            for i in 0..n - 1 {
                simple.push(vec_sub(&e(i, n), &e(i + 1, n)));
            }
            simple.push(e(n - 1, n));
            for i in 0..n {
                positives.push(e(i, n));
                for j in i + 1..n {
                    positives.push(vec_sub(&e(i, n), &e(j, n)));
                    positives.push(vec_add(&e(i, n), &e(j, n)));
                }
            }
        }
        'C' => {
            ambient_dim = n;
            for i in 0..n {
                *gram.at_mut(i, i) = rat(1, 2);
            }
            for i in 0..n - 1 {
                simple.push(vec_sub(&e(i, n), &e(i + 1, n)));
            }
            simple.push(vec_scale(&e(n - 1, n), &rint(2)));
            for i in 0..n {
                positives.push(vec_scale(&e(i, n), &rint(2)));
                for j in i + 1..n {
                    positives.push(vec_sub(&e(i, n), &e(j, n)));
                    positives.push(vec_add(&e(i, n), &e(j, n)));
                }
            }
        }
        'D' => {
            ambient_dim = n;
            gram = Mat::identity(n);
            for i in 0..n - 1 {
                simple.push(vec_sub(&e(i, n), &e(i + 1, n)));
            }
            simple.push(vec_add(&e(n - 2, n), &e(n - 1, n)));
            for i in 0..n {
                for j in i + 1..n {
                    positives.push(vec_sub(&e(i, n), &e(j, n)));
                    positives.push(vec_add(&e(i, n), &e(j, n)));
                }
            }
        }
        'G' => {
            // simple-root coordinates, α1 short, α2 long
            ambient_dim = 3;
            *gram.at_mut(0, 0) = rat(2, 3);
            *gram.at_mut(1, 1) = rint(2);
            *gram.at_mut(0, 1) = rint(-1);
            *gram.at_mut(1, 0) = rint(-1);
            simple.push(e(0, 2));
            simple.push(e(1, 2));
            for (a, b) in [(1i64, 0i64), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)] {
                positives.push(vec![rint(a), rint(b)]);
            }
        }
        'F' => {
            ambient_dim = 4;
            gram = Mat::identity(4);
            simple.push(vec_sub(&e(1, 4), &e(2, 4)));
            simple.push(vec_sub(&e(2, 4), &e(3, 4)));
            simple.push(e(3, 4));
            let half = rat(1, 2);
            simple.push(vec![half.clone(), -half.clone(), -half.clone(), -half.clone()]);
            for i in 0..4 {
                positives.push(e(i, 4));
                for j in i + 1..4 {
                    positives.push(vec_sub(&e(i, 4), &e(j, 4)));
                    positives.push(vec_add(&e(i, 4), &e(j, 4)));
                }
            }
            for s1 in [1i64, -1] {
                for s2 in [1i64, -1] {
                    for s3 in [1i64, -1] {
                        let v = vec![
                            half.clone(),
                            &half * rint(s1),
                            &half * rint(s2),
                            &half * rint(s3),
                        ];
                        positives.push(v);
                    }
                }
            }
        }
        _ => return Err(unsupported()),
    }

    let dual_coxeter: i64 = match family {
        'A' => n as i64 + 1,
        'B' => 2 * n as i64 - 1,
        'C' => n as i64 + 1,
        'D' => 2 * n as i64 - 2,
        'F' => 9,
        'G' => 4,
        _ => unreachable!(),
    };

    // order: simples first, then the remaining positives lexicographically
    let mut rest: Vec<Vec<Rat>> = positives
        .iter()
        .filter(|r| !simple.contains(r))
        .cloned()
        .collect();
    rest.sort();
    rest.dedup();
    let mut roots: Vec<Vec<Rat>> = simple.clone();
    roots.extend(rest);
    let n_positive = roots.len();
    for i in 0..n_positive {
        let neg = vec_neg(&roots[i]);
        roots.push(neg);
    }

    let ip = |a: &[Rat], b: &[Rat]| -> Rat {
        let mut acc = Rat::zero();
        for i in 0..n {
            for j in 0..n {
                acc += &a[i] * gram.at(i, j) * &b[j];
            }
        }
        acc
    };

    let coroot_forms: Vec<Vec<Rat>> = roots
        .iter()
        .map(|r| {
            let len2 = ip(r, r);
            let g_r: Vec<Rat> = (0..n)
                .map(|i| {
                    let mut acc = Rat::zero();
                    for j in 0..n {
                        acc += gram.at(i, j) * &r[j];
                    }
                    acc
                })
                .collect();
            vec_scale(&g_r, &(rint(2) / len2))
        })
        .collect();

    // expansion in simple roots (solve the rank x rank system)
    let simple_mat_cols = Mat::from_rows(
        (0..n)
            .map(|i| (0..n).map(|s| simple[s][i].clone()).collect())
            .collect(),
    );
    let simple_coeffs: Vec<Vec<Rat>> = roots
        .iter()
        .map(|r| {
            let c = simple_mat_cols.solve(r).expect("roots lie in the simple span");
            for x in &c {
                assert!(x.denom().is_one(), "root has non-integer simple coefficients");
            }
            c
        })
        .collect();
    // sanity: a positive root has all coefficients >= 0
    for (idx, c) in simple_coeffs.iter().enumerate() {
        let pos = c.iter().all(|x| !x.is_negative());
        assert_eq!(pos, idx < n_positive, "positivity mismatch in root ordering");
    }

    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = dot(&roots[i], &coroot_forms[j]);
                    assert!(v.denom().is_one());
                    i64::try_from(v.numer()).expect("cartan entry fits i64")
                })
                .collect()
        })
        .collect();

    let gram_killing = gram.scale(&(Rat::one() / rint(2 * dual_coxeter)));

    let index_of: BTreeMap<Vec<Rat>, usize> =
        roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

    Ok(RootSystem {
        family,
        rank,
        ambient_dim,
        roots,
        n_positive,
        simple: (0..n).collect(),
        cartan,
        gram_std: gram,
        gram_killing,
        dual_coxeter,
        coroot_forms,
        simple_coeffs,
        index_of,
    })
}

impl RootSystem {
    pub fn type_name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn positive_indices(&self) -> std::ops::Range<usize> {
        0..self.n_positive
    }

    pub fn neg_index(&self, i: usize) -> usize {
        if i < self.n_positive {
            i + self.n_positive
        } else {
            i - self.n_positive
        }
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_positive
    }

    pub fn root_index(&self, v: &[Rat]) -> Option<usize> {
        self.index_of.get(v).copied()
    }

    /// `λ(α∨)` for coordinates `λ` and root index `i`.
    pub fn pairing(&self, lambda: &[Rat], i: usize) -> Rat {
        dot(lambda, &self.coroot_forms[i])
    }

    pub fn coroot_form(&self, i: usize) -> &[Rat] {
        &self.coroot_forms[i]
    }

    /// Coefficients of the root in the simple-root basis (integers).
    pub fn simple_coefficients(&self, i: usize) -> &[Rat] {
        &self.simple_coeffs[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        let s: Rat = self.simple_coeffs[i].iter().sum();
        i64::try_from(s.numer()).unwrap()
    }

    pub fn ip_std(&self, a: &[Rat], b: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += &a[i] * self.gram_std.at(i, j) * &b[j];
            }
        }
        acc
    }

    pub fn ip_killing(&self, a: &[Rat], b: &[Rat]) -> Rat {
        self.ip_std(a, b) / rint(2 * self.dual_coxeter)
    }

    /// Reflection in the root, as a matrix acting on coordinates of the
    /// dual space (where roots and weights live): `s_α λ = λ − λ(α∨) α`.
    pub fn reflection_matrix(&self, i: usize) -> Mat<Rat> {
        let n = self.rank;
        let mut m = Mat::<Rat>::identity(n);
        for r in 0..n {
            for c in 0..n {
                let v = m.at(r, c).clone() - &self.roots[i][r] * &self.coroot_forms[i][c];
                *m.at_mut(r, c) = v;
            }
        }
        m
    }

    /// Half sum of positive roots.
    pub fn rho(&self) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); self.rank];
        for i in 0..self.n_positive {
            acc = vec_add(&acc, &self.roots[i]);
        }
        vec_scale(&acc, &rat(1, 2))
    }

    /// The highest root (maximal height).
    pub fn highest_root(&self) -> usize {
        (0..self.n_positive)
            .max_by_key(|&i| self.height(i))
            .unwrap()
    }

    /// Fundamental weights `ϖ_i(α_j∨) = δ_ij` as coordinate vectors.
    pub fn fundamental_weights(&self) -> Vec<Vec<Rat>> {
        let n = self.rank;
        let m = Mat::from_rows(
            (0..n)
                .map(|j| self.coroot_forms[j].to_vec())
                .collect::<Vec<_>>(),
        );
        (0..n)
            .map(|i| {
                let mut rhs = vec![Rat::zero(); n];
                rhs[i] = Rat::one();
                m.solve(&rhs).expect("coroot pairing matrix is invertible")
            })
            .collect()
    }

    pub fn is_dominant_integral(&self, lambda: &[Rat]) -> bool {
        (0..self.rank).all(|i| {
            let p = self.pairing(lambda, i);
            p.denom().is_one() && !p.is_negative()
        })
    }

    /// Membership in the root lattice (integer span of the simple roots).
    pub fn in_root_lattice(&self, lambda: &[Rat]) -> bool {
        let n = self.rank;
        let simple_mat_cols = Mat::from_rows(
            (0..n)
                .map(|i| (0..n).map(|s| self.roots[s][i].clone()).collect())
                .collect(),
        );
        match simple_mat_cols.solve(lambda) {
            Some(c) => c.iter().all(|x| x.denom().is_one()),
            None => false,
        }
    }

    /// Reflect into the dominant chamber.
    pub fn dominant_representative(&self, lambda: &[Rat]) -> Vec<Rat> {
        let mut v = lambda.to_vec();
        loop {
            let mut moved = false;
            for i in 0..self.rank {
                if self.pairing(&v, i).is_negative() {
                    let m = self.reflection_matrix(i);
                    v = m.mul_vec(&v);
                    moved = true;
                }
            }
            if !moved {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(family: char, rank: usize) -> (usize, usize) {
        let rs = build_root_system(family, rank).unwrap();
        (rs.roots.len(), rs.n_positive)
    }

    #[test]
    fn root_counts_match_classical_values() {
        assert_eq!(counts('A', 1), (2, 1));
        assert_eq!(counts('A', 2), (6, 3));
        assert_eq!(counts('A', 3), (12, 6));
        assert_eq!(counts('A', 4), (20, 10));
        assert_eq!(counts('B', 2), (8, 4));
        assert_eq!(counts('B', 3), (18, 9));
        assert_eq!(counts('B', 4), (32, 16));
        assert_eq!(counts('C', 3), (18, 9));
        assert_eq!(counts('D', 3), (12, 6));
        assert_eq!(counts('D', 4), (24, 12));
        assert_eq!(counts('G', 2), (12, 6));
        assert_eq!(counts('F', 4), (48, 24));
    }

    #[test]
    fn unsupported_types_are_rejected() {
        for (f, r) in [('E', 4), ('A', 5), ('B', 1), ('D', 2), ('G', 3), ('F', 3), ('H', 2)] {
            assert!(matches!(
                build_root_system(f, r),
                Err(Error::UnsupportedType { .. })
            ));
        }
    }

    #[test]
    fn b2_matches_the_orthonormal_realization() {
        let rs = build_root_system('B', 2).unwrap();
        // positive roots e1-e2, e2, e1, e1+e2 in some order
        let pos: Vec<Vec<Rat>> = (0..4).map(|i| rs.roots[i].clone()).collect();
        for v in [
            vec![rint(1), rint(-1)],
            vec![rint(0), rint(1)],
            vec![rint(1), rint(0)],
            vec![rint(1), rint(1)],
        ] {
            assert!(pos.contains(&v));
        }
        // standard form: identity on coordinates
        assert_eq!(rs.gram_std, Mat::identity(2));
        // Killing normalization <e_i, e_j> = δ_ij / 6
        assert_eq!(rs.ip_killing(&e(0, 2), &e(0, 2)), rat(1, 6));
        assert_eq!(rs.ip_killing(&e(0, 2), &e(1, 2)), rint(0));
        // 2ρ = 3 e1 + e2
        assert_eq!(vec_scale(&rs.rho(), &rint(2)), vec![rint(3), rint(1)]);
        assert_eq!(rs.dual_coxeter, 3);
    }

    #[test]
    fn killing_normalization_low_rank() {
        // <α,α> under the Killing-induced form: 1/2 for A1, 1/3 for A2
        let a1 = build_root_system('A', 1).unwrap();
        let al = &a1.roots[0];
        assert_eq!(a1.ip_killing(al, al), rat(1, 2));
        let a2 = build_root_system('A', 2).unwrap();
        let al = &a2.roots[0];
        assert_eq!(a2.ip_killing(al, al), rat(1, 3));
    }

    #[test]
    fn long_roots_have_squared_length_two() {
        for (f, r) in [('A', 2), ('B', 3), ('C', 3), ('D', 4), ('G', 2), ('F', 4)] {
            let rs = build_root_system(f, r).unwrap();
            let max = (0..rs.n_positive)
                .map(|i| rs.ip_std(&rs.roots[i], &rs.roots[i]))
                .max()
                .unwrap();
            assert_eq!(max, rint(2), "{f}{r}");
        }
    }

    #[test]
    fn cartan_matrices_match_classical_tables() {
        // convention: cartan[i][j] = α_i(α_j∨)
        let b2 = build_root_system('B', 2).unwrap();
        assert_eq!(b2.cartan, vec![vec![2, -2], vec![-1, 2]]);
        let g2 = build_root_system('G', 2).unwrap();
        assert_eq!(g2.cartan, vec![vec![2, -1], vec![-3, 2]]);
        let a3 = build_root_system('A', 3).unwrap();
        assert_eq!(
            a3.cartan,
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        let c3 = build_root_system('C', 3).unwrap();
        assert_eq!(
            c3.cartan,
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        for (f, r) in [('A', 3), ('B', 3), ('C', 2), ('D', 4), ('G', 2), ('F', 4)] {
            let rs = build_root_system(f, r).unwrap();
            let rho = rs.rho();
            for i in 0..rs.rank {
                assert_eq!(rs.pairing(&rho, i), rint(1), "{f}{r} simple {i}");
            }
        }
    }

    #[test]
    fn dual_coxeter_equals_one_plus_rho_of_highest_coroot() {
        for (f, r) in [('A', 2), ('B', 2), ('B', 3), ('C', 3), ('D', 4), ('G', 2), ('F', 4)] {
            let rs = build_root_system(f, r).unwrap();
            let theta = rs.highest_root();
            let v = rint(1) + rs.pairing(&rs.rho(), theta);
            assert_eq!(v, rint(rs.dual_coxeter), "{f}{r}");
        }
    }

    #[test]
    fn reflections_are_involutions_preserving_the_form() {
        let rs = build_root_system('G', 2).unwrap();
        for i in 0..rs.n_positive {
            let m = rs.reflection_matrix(i);
            assert_eq!(m.matmul(&m), Mat::identity(2));
            // s_α(α) = -α and the form is preserved
            let img = m.mul_vec(&rs.roots[i]);
            assert_eq!(img, vec_neg(&rs.roots[i]));
            for j in 0..rs.roots.len() {
                let rj = &rs.roots[j];
                let w = m.mul_vec(rj);
                assert!(rs.root_index(&w).is_some());
                assert_eq!(rs.ip_std(&w, &w), rs.ip_std(rj, rj));
            }
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_simple_coroots() {
        let rs = build_root_system('B', 3).unwrap();
        let fw = rs.fundamental_weights();
        for (i, w) in fw.iter().enumerate() {
            for j in 0..3 {
                assert_eq!(rs.pairing(w, j), rint(if i == j { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn root_lattice_membership() {
        let c2 = build_root_system('C', 2).unwrap();
        assert!(c2.in_root_lattice(&[rint(1), rint(1)]));
        assert!(c2.in_root_lattice(&[rint(2), rint(0)]));
        assert!(!c2.in_root_lattice(&[rint(1), rint(0)]));
        let a2 = build_root_system('A', 2).unwrap();
        assert!(a2.in_root_lattice(&[rint(1), rint(1)]));
        assert!(!a2.in_root_lattice(&[rat(1, 3), rat(2, 3)]));
    }
}
