//! Chevalley bases: integer structure constants extracted from the adjoint
//! representation.
//!
//! The adjoint module V(θ) is built as a weight skeleton; the simple
//! operators e_i, f_i, t_i = α_i∨ act by known dense matrices. Every other
//! root vector is produced by bracketing along a designated decomposition
//! γ = α_i + δ (i minimal), normalized so that N over the designated pair is
//! +(p+1) and [e_γ, f_γ] = γ∨. All remaining constants N_{γ,δ} are then read
//! off as exact matrix ratios, and the whole table is certified: integrality,
//! |N_{γ,δ}| = p+1, antisymmetry, N_{−γ,−δ} = −N_{γ,δ}, and the Jacobi
//! identity over every basis triple. The module also records the equivariant
//! identification φ: g ≅ V(θ) (column per basis letter) used when elements of
//! g must be fed to operators defined on the skeleton basis.
//!
//! Basis letters are ordered f_γ (positive roots in root order), then t_i,
//! then e_γ. This is the letter order the enveloping-algebra module sorts
//! monomials by.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::repth::skeleton::{build_skeleton, dense_cartan, dense_simple_operator, HwSkeleton};
use crate::rootsys::RootSystem;
use crate::scalar::{rat, rint, Rat};

/// A basis letter of g. `F(p)` and `E(p)` are the root vectors attached to
/// the p-th *positive* root (so `F(p)` spans the −γ_p root space); `T(i)` is
/// the simple coroot α_i∨.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    F(usize),
    T(usize),
    E(usize),
}

#[derive(Clone, Debug)]
pub struct ChevalleyData {
    pub rank: usize,
    pub n_pos: usize,
    /// The adjoint weight skeleton (highest weight θ).
    pub skeleton: HwSkeleton,
    /// ad(letter) on the skeleton basis, indexed by letter index.
    pub rho: Vec<Mat<Rat>>,
    /// N_{γ,δ} keyed by (root index, root index), present exactly when
    /// γ + δ is a root.
    n_table: BTreeMap<(usize, usize), Rat>,
    /// Index of γ + δ when it is a root.
    sum_index: BTreeMap<(usize, usize), usize>,
    /// γ(α_i∨) per root index γ and simple i.
    root_pairing: Vec<Vec<Rat>>,
    /// γ∨ = Σ_j coroot_coeffs[γ][j] α_j∨ for every root index γ.
    pub coroot_coeffs: Vec<Vec<Rat>>,
    /// Designated decomposition γ_p = α_i + γ_q of each non-simple positive
    /// root, as `(i, q)`; `None` for simples.
    pub special_pair: Vec<Option<(usize, usize)>>,
    /// Killing form B(t_i, t_j).
    pub killing_cartan: Mat<Rat>,
    /// B(e_γ, f_γ) per positive root.
    pub killing_ef: Vec<Rat>,
    /// Columns are φ(letter) in skeleton coordinates; φ intertwines ad with
    /// the skeleton action and is invertible.
    pub embed: Mat<Rat>,
}

impl ChevalleyData {
    pub fn dim(&self) -> usize {
        2 * self.n_pos + self.rank
    }

    pub fn letter_index(&self, l: Letter) -> usize {
        match l {
            Letter::F(p) => p,
            Letter::T(i) => self.n_pos + i,
            Letter::E(p) => self.n_pos + self.rank + p,
        }
    }

    pub fn letter(&self, idx: usize) -> Letter {
        if idx < self.n_pos {
            Letter::F(idx)
        } else if idx < self.n_pos + self.rank {
            Letter::T(idx - self.n_pos)
        } else {
            Letter::E(idx - self.n_pos - self.rank)
        }
    }

    /// Letter index of the root vector x_γ for a root index γ.
    pub fn letter_of_root(&self, g: usize) -> usize {
        if g < self.n_pos {
            self.n_pos + self.rank + g
        } else {
            g - self.n_pos
        }
    }

    /// Root index spanned by a letter, `None` for Cartan letters.
    pub fn root_of_letter(&self, idx: usize) -> Option<usize> {
        match self.letter(idx) {
            Letter::F(p) => Some(self.n_pos + p),
            Letter::T(_) => None,
            Letter::E(p) => Some(p),
        }
    }

    fn neg_root(&self, g: usize) -> usize {
        if g < self.n_pos {
            g + self.n_pos
        } else {
            g - self.n_pos
        }
    }

    /// N_{γ,δ}, defined when γ + δ is a root.
    pub fn n_constant(&self, g: usize, d: usize) -> Option<&Rat> {
        self.n_table.get(&(g, d))
    }

    /// [x_a, x_b] for letter indices a, b, as a sparse combination of letters.
    pub fn bracket(&self, a: usize, b: usize) -> Vec<(usize, Rat)> {
        match (self.letter(a), self.letter(b)) {
            (Letter::T(_), Letter::T(_)) => Vec::new(),
            (Letter::T(i), _) => {
                let g = self.root_of_letter(b).unwrap();
                let c = self.root_pairing[g][i].clone();
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(b, c)]
                }
            }
            (_, Letter::T(i)) => {
                let g = self.root_of_letter(a).unwrap();
                let c = self.root_pairing[g][i].clone();
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(a, -c)]
                }
            }
            _ => {
                let g = self.root_of_letter(a).unwrap();
                let d = self.root_of_letter(b).unwrap();
                if d == self.neg_root(g) {
                    // [x_γ, x_{−γ}] = γ∨
                    (0..self.rank)
                        .filter(|&j| !self.coroot_coeffs[g][j].is_zero())
                        .map(|j| (self.n_pos + j, self.coroot_coeffs[g][j].clone()))
                        .collect()
                } else if let Some(&u) = self.sum_index.get(&(g, d)) {
                    vec![(self.letter_of_root(u), self.n_table[&(g, d)].clone())]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Weight of a letter as a linear functional on h, in ambient coordinates
    /// (zero for Cartan letters).
    pub fn letter_weight(&self, rs: &RootSystem, idx: usize) -> Vec<Rat> {
        match self.root_of_letter(idx) {
            Some(g) => rs.roots[g].clone(),
            None => vec![Rat::zero(); rs.rank],
        }
    }

    /// Dense skeleton matrix of an arbitrary element Σ coeffs[l]·x_l.
    pub fn dense_element(&self, coeffs: &[(usize, Rat)]) -> Mat<Rat> {
        let n = self.skeleton.dim;
        let mut m = Mat::<Rat>::zeros(n, n);
        for (l, c) in coeffs {
            m = m.add(&self.rho[*l].scale(c));
        }
        m
    }

    fn verify_jacobi(&self) -> Result<()> {
        let dim = self.dim();
        for a in 0..dim {
            for b in a..dim {
                for c in b..dim {
                    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (l1, c1) in self.bracket(x, y) {
                            for (l2, c2) in self.bracket(l1, z) {
                                let e = acc.entry(l2).or_insert_with(Rat::zero);
                                *e += &c1 * &c2;
                            }
                        }
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        return Err(Error::JacobiFailure(
                            format!("{:?}", self.letter(a)),
                            format!("{:?}", self.letter(b)),
                            format!("{:?}", self.letter(c)),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The scalar c with m = c·target, if one exists (target must be nonzero).
fn matrix_ratio(m: &Mat<Rat>, target: &Mat<Rat>) -> Option<Rat> {
    for i in 0..target.rows {
        for j in 0..target.cols {
            if !target.at(i, j).is_zero() {
                let c = m.at(i, j) / target.at(i, j);
                return if *m == target.scale(&c) { Some(c) } else { None };
            }
        }
    }
    None
}

/// Largest t ≥ 0 with δ − t·γ a root (the chain length entering |N_{γ,δ}| = p+1).
fn chain_down(rs: &RootSystem, d: usize, g: usize) -> i64 {
    let mut t = 0;
    loop {
        let probe: Vec<Rat> = rs.roots[d]
            .iter()
            .zip(&rs.roots[g])
            .map(|(a, b)| a - b * rint(t + 1))
            .collect();
        if rs.root_index(&probe).is_none() {
            return t;
        }
        t += 1;
    }
}

fn comm(a: &Mat<Rat>, b: &Mat<Rat>) -> Mat<Rat> {
    a.matmul(b).sub(&b.matmul(a))
}

pub fn build_chevalley(rs: &RootSystem) -> Result<ChevalleyData> {
    if rs.rank > 3 {
        return Err(Error::RankCapExceeded(rs.rank, 3));
    }
    let n = rs.n_positive;
    let ell = rs.rank;
    let theta = rs.highest_root();
    let sk = build_skeleton(rs, &rs.roots[theta].clone(), 64)?;
    let dimg = 2 * n + ell;
    assert_eq!(sk.dim, dimg, "adjoint module has dimension 2N + rank");

    let e_s: Vec<Mat<Rat>> = (0..ell).map(|i| dense_simple_operator(rs, &sk, i, true)).collect();
    let f_s: Vec<Mat<Rat>> = (0..ell).map(|i| dense_simple_operator(rs, &sk, i, false)).collect();
    let t_s: Vec<Mat<Rat>> = (0..ell).map(|i| dense_cartan(rs, &sk, i)).collect();

    // γ∨ expanded over the simple coroots: solve against the coroot forms.
    let mut amat = Mat::<Rat>::zeros(ell, ell);
    for j in 0..ell {
        for r in 0..ell {
            *amat.at_mut(r, j) = rs.coroot_form(j)[r].clone();
        }
    }
    let coroot_coeffs: Vec<Vec<Rat>> = (0..rs.roots.len())
        .map(|g| {
            amat.solve(rs.coroot_form(g))
                .expect("every coroot lies in the span of the simple coroots")
        })
        .collect();

    // Non-simple root vectors, by increasing height through designated pairs.
    let mut by_height: Vec<usize> = (0..n).collect();
    by_height.sort_by_key(|&p| (rs.height(p), p));

    let mut rho_opt: Vec<Option<Mat<Rat>>> = vec![None; dimg];
    for i in 0..ell {
        rho_opt[i] = Some(f_s[i].clone());
        rho_opt[n + i] = Some(t_s[i].clone());
        rho_opt[n + ell + i] = Some(e_s[i].clone());
    }
    let mut special_pair: Vec<Option<(usize, usize)>> = vec![None; n];
    for &p in &by_height {
        if p < ell {
            continue;
        }
        let (i, q) = (0..ell)
            .find_map(|i| {
                let diff: Vec<Rat> = rs.roots[p]
                    .iter()
                    .zip(&rs.roots[i])
                    .map(|(a, b)| a - b)
                    .collect();
                rs.root_index(&diff).filter(|&q| q < n).map(|q| (i, q))
            })
            .expect("a non-simple positive root descends through some simple root");
        special_pair[p] = Some((i, q));
        let pch = chain_down(rs, q, i);
        let e_new = comm(&e_s[i], rho_opt[n + ell + q].as_ref().unwrap())
            .scale(&rat(1, pch + 1));

        // Scale the f-side so that [e_γ, f_γ] = γ∨.
        let h_mat = (0..ell).fold(Mat::<Rat>::zeros(dimg, dimg), |acc, j| {
            acc.add(&t_s[j].scale(&coroot_coeffs[p][j]))
        });
        let f_raw = comm(&f_s[i], rho_opt[q].as_ref().unwrap());
        let c_mat = comm(&e_new, &f_raw);
        let s = matrix_ratio(&c_mat, &h_mat)
            .filter(|s| !s.is_zero())
            .ok_or_else(|| {
                Error::Invalid(format!("[e, f] is not a nonzero multiple of γ∨ at root {p}"))
            })?;
        rho_opt[p] = Some(f_raw.scale(&(Rat::one() / &s)));
        rho_opt[n + ell + p] = Some(e_new);
    }
    let rho: Vec<Mat<Rat>> = rho_opt.into_iter().map(|m| m.unwrap()).collect();

    // Which pairs of roots sum to a root.
    let n_roots = rs.roots.len();
    let mut sum_index = BTreeMap::new();
    for a in 0..n_roots {
        for b in 0..n_roots {
            if a == b {
                continue;
            }
            let s: Vec<Rat> = rs.roots[a]
                .iter()
                .zip(&rs.roots[b])
                .map(|(x, y)| x + y)
                .collect();
            if let Some(u) = rs.root_index(&s) {
                sum_index.insert((a, b), u);
            }
        }
    }

    // Pull N_{γ,δ} off the matrices and certify each entry.
    let here = |g: usize| if g < n { n + ell + g } else { g - n };
    let mut n_table: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    for (&(a, b), &u) in &sum_index {
        let m = comm(&rho[here(a)], &rho[here(b)]);
        let nval = matrix_ratio(&m, &rho[here(u)])
            .filter(|v| !v.is_zero())
            .ok_or_else(|| Error::Invalid(format!("[x_{a}, x_{b}] not proportional to x_{u}")))?;
        if !nval.is_integer() {
            return Err(Error::Invalid(format!("N({a},{b}) = {nval} is not an integer")));
        }
        let pch = chain_down(rs, b, a);
        if nval.abs() != rint(pch + 1) {
            return Err(Error::Invalid(format!(
                "|N({a},{b})| = {} but the chain gives {}",
                nval.abs(),
                pch + 1
            )));
        }
        n_table.insert((a, b), nval);
    }
    let neg = |g: usize| if g < n { g + n } else { g - n };
    for (&(a, b), nv) in &n_table {
        assert_eq!(n_table[&(b, a)], -nv, "antisymmetry of N");
        assert_eq!(n_table[&(neg(a), neg(b))], -nv.clone(), "N(−γ,−δ) = −N(γ,δ)");
    }

    let root_pairing: Vec<Vec<Rat>> = (0..n_roots)
        .map(|g| (0..ell).map(|i| rs.pairing(&rs.roots[g], i)).collect())
        .collect();

    // Killing form by traces in the adjoint representation.
    let mut killing_cartan = Mat::<Rat>::zeros(ell, ell);
    for i in 0..ell {
        for j in 0..ell {
            let mut tr = Rat::zero();
            for d in 0..dimg {
                tr += rho[n + i].at(d, d) * rho[n + j].at(d, d);
            }
            *killing_cartan.at_mut(i, j) = tr;
        }
    }
    let killing_ef: Vec<Rat> = (0..n)
        .map(|p| {
            let prod = rho[n + ell + p].matmul(&rho[p]);
            (0..dimg).fold(Rat::zero(), |acc, d| acc + prod.at(d, d))
        })
        .collect();

    let mut cd = ChevalleyData {
        rank: ell,
        n_pos: n,
        skeleton: sk,
        rho,
        n_table,
        sum_index,
        root_pairing,
        coroot_coeffs,
        special_pair,
        killing_cartan,
        killing_ef,
        embed: Mat::zeros(dimg, dimg),
    };
    cd.verify_jacobi()?;

    // φ: g → V(θ). Seed the highest root vector, descend the e-side by
    // height, then t_i = −[f_i, e_{α_i}], f_i = [f_i, t_i]/2, and the f-side
    // upward through the designated pairs.
    let mut cols: Vec<Option<Vec<Rat>>> = vec![None; dimg];
    let top_wi = cd
        .skeleton
        .index_of_weight(&rs.roots[theta])
        .expect("θ is a weight of the adjoint module");
    let mut top = vec![Rat::zero(); dimg];
    top[cd.skeleton.global_index(top_wi, 0)] = Rat::one();
    cols[n + ell + theta] = Some(top);
    for &p in by_height.iter().rev() {
        if p == theta {
            continue;
        }
        let (i, s) = (0..ell)
            .find_map(|i| {
                let up: Vec<Rat> = rs.roots[p]
                    .iter()
                    .zip(&rs.roots[i])
                    .map(|(a, b)| a + b)
                    .collect();
                rs.root_index(&up).map(|s| (i, s))
            })
            .expect("θ is the unique maximal element of the root poset");
        let nval = cd.n_table[&(rs.neg_index(i), s)].clone();
        let prev = cols[n + ell + s].as_ref().expect("processed by height");
        let v = cd.rho[i].mul_vec(prev);
        cols[n + ell + p] = Some(v.iter().map(|x| x / &nval).collect());
    }
    for i in 0..ell {
        let v = cd.rho[i].mul_vec(cols[n + ell + i].as_ref().unwrap());
        cols[n + i] = Some(v.iter().map(|x| -x).collect());
    }
    for i in 0..ell {
        let v = cd.rho[i].mul_vec(cols[n + i].as_ref().unwrap());
        cols[i] = Some(v.iter().map(|x| x / rint(2)).collect());
    }
    for &p in &by_height {
        if p < ell {
            continue;
        }
        let (i, q) = cd.special_pair[p].unwrap();
        let nval = cd.n_table[&(rs.neg_index(i), rs.neg_index(q))].clone();
        let v = cd.rho[i].mul_vec(cols[q].as_ref().unwrap());
        cols[p] = Some(v.iter().map(|x| x / &nval).collect());
    }
    let mut embed = Mat::<Rat>::zeros(dimg, dimg);
    for (l, col) in cols.iter().enumerate() {
        for (r, x) in col.as_ref().unwrap().iter().enumerate() {
            *embed.at_mut(r, l) = x.clone();
        }
    }
    assert!(embed.inverse().is_some(), "φ must be invertible");

    // Full intertwining check: ρ(x)·φ(y) = φ([x, y]) for all letters x, y.
    for x in 0..dimg {
        for y in 0..dimg {
            let lhs = cd.rho[x].mul_vec(&embed.col(y));
            let mut rhs = vec![Rat::zero(); dimg];
            for (l, c) in cd.bracket(x, y) {
                for (r, val) in rhs.iter_mut().enumerate() {
                    *val += embed.at(r, l) * &c;
                }
            }
            assert_eq!(lhs, rhs, "φ intertwines ad at letters ({x}, {y})");
        }
    }
    cd.embed = embed;
    Ok(cd)
}
