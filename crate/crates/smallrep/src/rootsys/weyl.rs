//! The Weyl group as an explicit permutation/matrix group, generated by
//! breadth-first closure over the simple reflections. Elements are stored
//! in BFS order (identity first, then by length), so every `word` is a
//! reduced expression.

use super::RootSystem;
use crate::linalg::Mat;
use crate::scalar::Rat;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Action on the dual space (weights, roots) in coordinates.
    pub matrix: Mat<Rat>,
    /// Reduced word in simple reflections.
    pub word: Vec<usize>,
    pub det: i64,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    /// `mul[i][j]` = index of `elements[i] * elements[j]`.
    pub mul: Vec<Vec<u32>>,
    pub inv: Vec<u32>,
    /// Index of the generator `s_i` among the elements.
    pub gen_index: Vec<usize>,
    /// `root_action[w][r]` = index of `w(α_r)` among the roots.
    pub root_action: Vec<Vec<u32>>,
    /// Weyl group element index of the reflection `s_α`, per root.
    pub reflection_elt: Vec<u32>,
    /// Conjugacy classes as sorted element-index lists, ordered by their
    /// minimal element.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// W-orbits of roots (sorted root-index lists, ordered by minimum).
    pub root_orbits: Vec<Vec<usize>>,
    pub orbit_of_root: Vec<usize>,
}

fn mat_key(m: &Mat<Rat>) -> Vec<Rat> {
    m.data.to_vec()
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.rank;
        let gens: Vec<Mat<Rat>> = (0..n).map(|i| rs.reflection_matrix(i)).collect();

        let mut elements: Vec<WeylElement> = vec![WeylElement {
            matrix: Mat::identity(n),
            word: vec![],
            det: 1,
        }];
        let mut index: HashMap<Vec<Rat>, usize> = HashMap::new();
        index.insert(mat_key(&elements[0].matrix), 0);

        // BFS, recording right multiplication by generators as we go
        let mut right_gen: Vec<Vec<u32>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(n);
            for (i, g) in gens.iter().enumerate() {
                let m = elements[head].matrix.matmul(g);
                let key = mat_key(&m);
                let idx = match index.get(&key) {
                    Some(&idx) => idx,
                    None => {
                        let mut word = elements[head].word.clone();
                        word.push(i);
                        let det = -elements[head].det;
                        elements.push(WeylElement { matrix: m, word, det });
                        let idx = elements.len() - 1;
                        index.insert(key, idx);
                        idx
                    }
                };
                row.push(idx as u32);
            }
            right_gen.push(row);
            head += 1;
        }
        let order = elements.len();

        let gen_index: Vec<usize> = (0..n).map(|i| right_gen[0][i] as usize).collect();

        // multiplication table by following reduced words
        let mut mul = vec![vec![0u32; order]; order];
        for (i, mrow) in mul.iter_mut().enumerate() {
            for (j, slot) in mrow.iter_mut().enumerate() {
                let mut x = i;
                for &l in &elements[j].word {
                    x = right_gen[x][l] as usize;
                }
                *slot = x as u32;
            }
        }

        let mut inv = vec![0u32; order];
        for (i, e) in elements.iter().enumerate() {
            let mut x = 0usize;
            for &l in e.word.iter().rev() {
                x = right_gen[x][l] as usize;
            }
            inv[i] = x as u32;
        }

        // action on roots
        let nroots = rs.roots.len();
        let mut root_action = vec![vec![0u32; nroots]; order];
        for (w, e) in elements.iter().enumerate() {
            for r in 0..nroots {
                let img = e.matrix.mul_vec(&rs.roots[r]);
                root_action[w][r] =
                    rs.root_index(&img).expect("W permutes the roots") as u32;
            }
        }

        // reflections: match matrices
        let mut reflection_elt = vec![0u32; nroots];
        for r in 0..nroots {
            let m = rs.reflection_matrix(r);
            reflection_elt[r] = *index.get(&mat_key(&m)).expect("reflection is in W") as u32;
        }

        // conjugacy classes
        let mut class_of = vec![usize::MAX; order];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..order {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut orbit: Vec<usize> = (0..order)
                .map(|g| mul[mul[g][i] as usize][inv[g] as usize] as usize)
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            let cid = classes.len();
            for &x in &orbit {
                class_of[x] = cid;
            }
            classes.push(orbit);
        }

        // root orbits
        let mut orbit_of_root = vec![usize::MAX; nroots];
        let mut root_orbits: Vec<Vec<usize>> = Vec::new();
        for r in 0..nroots {
            if orbit_of_root[r] != usize::MAX {
                continue;
            }
            let mut orbit: Vec<usize> = (0..order)
                .map(|w| root_action[w][r] as usize)
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            let oid = root_orbits.len();
            for &x in &orbit {
                orbit_of_root[x] = oid;
            }
            root_orbits.push(orbit);
        }

        WeylGroup {
            elements,
            mul,
            inv,
            gen_index,
            root_action,
            reflection_elt,
            classes,
            class_of,
            root_orbits,
            orbit_of_root,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].word.len()
    }

    pub fn longest_element(&self) -> usize {
        self.elements.len() - 1
    }

    /// Apply `w` to a coordinate vector in the dual space.
    pub fn act(&self, w: usize, v: &[Rat]) -> Vec<Rat> {
        self.elements[w].matrix.mul_vec(v)
    }

    pub fn class_representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::scalar::rint;

    fn group(f: char, r: usize) -> (crate::rootsys::RootSystem, WeylGroup) {
        let rs = build_root_system(f, r).unwrap();
        let w = WeylGroup::new(&rs);
        (rs, w)
    }

    #[test]
    fn orders_match_classical_values() {
        for (f, r, n) in [
            ('A', 1, 2),
            ('A', 2, 6),
            ('A', 3, 24),
            ('A', 4, 120),
            ('B', 2, 8),
            ('B', 3, 48),
            ('B', 4, 384),
            ('C', 3, 48),
            ('D', 3, 24),
            ('D', 4, 192),
            ('G', 2, 12),
            ('F', 4, 1152),
        ] {
            let (_, w) = group(f, r);
            assert_eq!(w.order(), n, "{f}{r}");
        }
    }

    #[test]
    fn multiplication_table_is_a_group() {
        let (_, w) = group('B', 2);
        let n = w.order();
        for i in 0..n {
            assert_eq!(w.mul[0][i], i as u32);
            assert_eq!(w.mul[i][0], i as u32);
            assert_eq!(w.mul[i][w.inv[i] as usize], 0);
            for j in 0..n {
                // matrix consistency
                let prod = w.elements[i].matrix.matmul(&w.elements[j].matrix);
                assert_eq!(prod, w.elements[w.mul[i][j] as usize].matrix);
            }
        }
    }

    #[test]
    fn words_are_reduced_and_geodesic() {
        let (rs, w) = group('G', 2);
        // longest element of G2 has length 6 = number of positive roots
        assert_eq!(w.length(w.longest_element()), rs.n_positive);
        // length is monotone along BFS order
        for i in 1..w.order() {
            assert!(w.length(i - 1) <= w.length(i));
        }
        // length equals the number of positive roots sent negative
        for i in 0..w.order() {
            let neg = (0..rs.n_positive)
                .filter(|&r| w.root_action[i][r] as usize >= rs.n_positive)
                .count();
            assert_eq!(neg, w.length(i));
        }
    }

    #[test]
    fn conjugacy_class_counts() {
        assert_eq!(group('A', 2).1.classes.len(), 3);
        assert_eq!(group('B', 2).1.classes.len(), 5);
        assert_eq!(group('A', 3).1.classes.len(), 5);
        assert_eq!(group('B', 3).1.classes.len(), 10);
        assert_eq!(group('G', 2).1.classes.len(), 6);
    }

    #[test]
    fn root_orbit_structure() {
        let (_, wb2) = group('B', 2);
        assert_eq!(wb2.root_orbits.len(), 2); // short and long
        let (_, wa3) = group('A', 3);
        assert_eq!(wa3.root_orbits.len(), 1);
        let (_, wg2) = group('G', 2);
        assert_eq!(wg2.root_orbits.len(), 2);
        let (_, wd4) = group('D', 4);
        assert_eq!(wd4.root_orbits.len(), 1);
    }

    #[test]
    fn reflections_act_correctly() {
        let (rs, w) = group('B', 3);
        for r in 0..rs.n_positive {
            let s = w.reflection_elt[r] as usize;
            assert_eq!(w.mul[s][s], 0);
            // s_α(α) = -α
            assert_eq!(w.root_action[s][r] as usize, rs.neg_index(r));
            let lhs = w.act(s, &rs.rho());
            let rhs: Vec<Rat> = (0..3)
                .map(|c| &rs.rho()[c] - rs.pairing(&rs.rho(), r) * &rs.roots[r][c])
                .collect();
            assert_eq!(lhs, rhs);
        }
        // identity sanity
        assert_eq!(w.act(0, &[rint(1), rint(2), rint(3)]), vec![rint(1), rint(2), rint(3)]);
    }
}
