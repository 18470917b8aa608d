//! Embedded character tables of the Weyl groups of rank ≤ 3, verified
//! against orthogonality at load time.
//!
//! Conjugacy classes are recognized by a realization-independent
//! fingerprint: (class size, element order, trace, det, and — for
//! reflection classes — the squared length of the reflecting root). The
//! last entry is what separates the two reflection classes in B2/C2/B3/C3
//! and G2. Character values are stored per catalog class and permuted into
//! the group's own class order on load.
//!
//! Naming: `triv`, `sgn` (= det), `refl` (trace of the defining
//! reflection representation). In types with two root lengths, `eps_s`
//! is the linear character taking −1 exactly on reflections in short
//! roots, `eps_l` the long counterpart (these are B2's τ and τ⊗sgn).

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::RootSystem;
use crate::scalar::{rat_string, rint, Rat};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Fingerprint {
    size: usize,
    order: usize,
    trace: Rat,
    det: i64,
    /// squared length (standard normalization) of a reflecting root, 0 for
    /// non-reflection classes
    refl_len2: Rat,
}

#[derive(Clone, Debug)]
pub struct WCharTable {
    /// Conjugacy classes in the group's own order.
    pub classes: Vec<Vec<usize>>,
    pub class_rep: Vec<usize>,
    pub class_size: Vec<usize>,
    pub names: Vec<String>,
    /// values[chi][class]
    pub values: Vec<Vec<Rat>>,
}

impl WCharTable {
    pub fn char_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, chi: usize) -> &Rat {
        // χ(1): the identity always lies in class 0 (classes are ordered by
        // minimal element and the identity has index 0)
        &self.values[chi][0]
    }

    pub fn n_chars(&self) -> usize {
        self.names.len()
    }

    /// Decompose a class function given by its traces on the class
    /// representatives. Errors with [`Error::NonIntegralMultiplicity`] if
    /// any inner product fails to be a nonnegative integer.
    pub fn decompose(&self, traces: &[Rat]) -> Result<Vec<(String, u64)>> {
        let order: usize = self.class_size.iter().sum();
        let mut out = Vec::new();
        for (chi, name) in self.names.iter().enumerate() {
            let mut ip = Rat::zero();
            for (c, t) in traces.iter().enumerate() {
                ip += rint(self.class_size[c] as i64) * &self.values[chi][c] * t;
            }
            ip /= rint(order as i64);
            if !ip.is_integer() || ip < Rat::zero() {
                return Err(Error::NonIntegralMultiplicity(format!(
                    "⟨χ_{name}, tr⟩ = {}",
                    rat_string(&ip)
                )));
            }
            let m = ip.to_integer().to_u64().unwrap();
            if m > 0 {
                out.push((name.clone(), m));
            }
        }
        Ok(out)
    }
}

fn element_order(w: &WeylGroup, e: usize) -> usize {
    let mut x = e;
    let mut k = 1;
    while x != 0 {
        x = w.mul[x][e] as usize;
        k += 1;
    }
    k
}

fn trace(m: &Mat<Rat>) -> Rat {
    (0..m.rows).fold(Rat::zero(), |acc, i| acc + m.at(i, i))
}

fn fingerprint_classes(rs: &RootSystem, w: &WeylGroup) -> Vec<Fingerprint> {
    // reflecting-root length per class containing reflections
    let mut refl_len: BTreeMap<usize, Rat> = BTreeMap::new();
    for (r, &e) in w.reflection_elt.iter().enumerate() {
        let c = w.class_of[e as usize];
        let l2 = rs.ip_std(&rs.roots[r], &rs.roots[r]);
        let prev = refl_len.insert(c, l2.clone());
        if let Some(p) = prev {
            assert_eq!(p, l2, "reflections in one class share a root length");
        }
    }
    w.classes
        .iter()
        .enumerate()
        .map(|(c, cls)| {
            let rep = cls[0];
            Fingerprint {
                size: cls.len(),
                order: element_order(w, rep),
                trace: trace(&w.elements[rep].matrix),
                det: w.elements[rep].det,
                refl_len2: refl_len.get(&c).cloned().unwrap_or_else(Rat::zero),
            }
        })
        .collect()
}

/// Catalog rows: fingerprints in *catalog* class order, then the character
/// rows as (name, values-in-catalog-order).
struct Catalog {
    prints: Vec<Fingerprint>,
    chars: Vec<(&'static str, Vec<i64>)>,
}

fn fp(size: usize, order: usize, trace: i64, det: i64, len2: (i64, i64)) -> Fingerprint {
    Fingerprint {
        size,
        order,
        trace: rint(trace),
        det,
        refl_len2: crate::scalar::rat(len2.0, len2.1),
    }
}

fn catalog_for(rs: &RootSystem) -> Result<Catalog> {
    let short2: (i64, i64) = match rs.family {
        'B' => (1, 1),
        'C' => (1, 1),
        'G' => (2, 3),
        _ => (2, 1),
    };
    let c = match (rs.family, rs.rank) {
        ('A', 1) => Catalog {
            prints: vec![fp(1, 1, 1, 1, (0, 1)), fp(1, 2, -1, -1, (2, 1))],
            chars: vec![("triv", vec![1, 1]), ("sgn", vec![1, -1])],
        },
        ('A', 2) => Catalog {
            // classes: id, transpositions, 3-cycles (simple-root coordinates)
            prints: vec![
                fp(1, 1, 2, 1, (0, 1)),
                fp(3, 2, 0, -1, (2, 1)),
                fp(2, 3, -1, 1, (0, 1)),
            ],
            chars: vec![
                ("triv", vec![1, 1, 1]),
                ("sgn", vec![1, -1, 1]),
                ("refl", vec![2, 0, -1]),
            ],
        },
        ('A', 3) | ('D', 3) => Catalog {
            // classes: id, (12), (12)(34), (123), (1234)
            prints: vec![
                fp(1, 1, 3, 1, (0, 1)),
                fp(6, 2, 1, -1, (2, 1)),
                fp(3, 2, -1, 1, (0, 1)),
                fp(8, 3, 0, 1, (0, 1)),
                fp(6, 4, -1, -1, (0, 1)),
            ],
            chars: vec![
                ("triv", vec![1, 1, 1, 1, 1]),
                ("sgn", vec![1, -1, 1, 1, -1]),
                ("two", vec![2, 0, 2, -1, 0]),
                ("refl", vec![3, 1, -1, 0, -1]),
                ("refl_sgn", vec![3, -1, -1, 0, 1]),
            ],
        },
        ('B', 2) | ('C', 2) => Catalog {
            // classes: id, −id, rotation by ±π/2, short reflections, long
            // reflections
            prints: vec![
                fp(1, 1, 2, 1, (0, 1)),
                fp(1, 2, -2, 1, (0, 1)),
                fp(2, 4, 0, 1, (0, 1)),
                fp(2, 2, 0, -1, short2),
                fp(2, 2, 0, -1, (2, 1)),
            ],
            chars: vec![
                ("triv", vec![1, 1, 1, 1, 1]),
                ("sgn", vec![1, 1, 1, -1, -1]),
                ("refl", vec![2, -2, 0, 0, 0]),
                ("eps_s", vec![1, 1, -1, -1, 1]),
                ("eps_l", vec![1, 1, -1, 1, -1]),
            ],
        },
        ('G', 2) => Catalog {
            // dihedral of order 12: id, −id, rotation ±π/3, rotation ±2π/3,
            // short reflections, long reflections
            prints: vec![
                fp(1, 1, 2, 1, (0, 1)),
                fp(1, 2, -2, 1, (0, 1)),
                fp(2, 6, 1, 1, (0, 1)),
                fp(2, 3, -1, 1, (0, 1)),
                fp(3, 2, 0, -1, short2),
                fp(3, 2, 0, -1, (2, 1)),
            ],
            chars: vec![
                ("triv", vec![1, 1, 1, 1, 1, 1]),
                ("sgn", vec![1, 1, 1, 1, -1, -1]),
                ("eps_s", vec![1, -1, -1, 1, -1, 1]),
                ("eps_l", vec![1, -1, -1, 1, 1, -1]),
                ("refl", vec![2, -2, 1, -1, 0, 0]),
                ("rot2", vec![2, 2, -1, -1, 0, 0]),
            ],
        },
        ('B', 3) | ('C', 3) => {
            // signed permutations of three letters; classes by signed cycle
            // type: id; −id; one flip; two flips; transposition;
            // transposition·flip; negative transposition; negative
            // transposition·flip; 3-cycle; negative 3-cycle.
            //
            // Flips reflect in ±e_i / ±2e_i (short for B, long for C) and
            // transpositions in e_i − e_j (long for B, short for C), so the
            // length slots and the eps names swap between the two families.
            let (flip2, transp2) = if rs.family == 'B' { ((1, 1), (2, 1)) } else { ((2, 1), (1, 1)) };
            let (eps_flip, eps_transp) = if rs.family == 'B' { ("eps_s", "eps_l") } else { ("eps_l", "eps_s") };
            Catalog {
                prints: vec![
                    fp(1, 1, 3, 1, (0, 1)),
                    fp(1, 2, -3, -1, (0, 1)),
                    fp(3, 2, 1, -1, flip2),
                    fp(3, 2, -1, 1, (0, 1)),
                    fp(6, 2, 1, -1, transp2),
                    fp(6, 2, -1, 1, (0, 1)),
                    fp(6, 4, 1, 1, (0, 1)),
                    fp(6, 4, -1, -1, (0, 1)),
                    fp(8, 3, 0, 1, (0, 1)),
                    fp(8, 6, 0, -1, (0, 1)),
                ],
                chars: vec![
                    ("triv", vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
                    ("sgn", vec![1, -1, -1, 1, -1, 1, 1, -1, 1, -1]),
                    (eps_transp, vec![1, 1, 1, 1, -1, -1, -1, -1, 1, 1]),
                    (eps_flip, vec![1, -1, -1, 1, 1, -1, -1, 1, 1, -1]),
                    ("two", vec![2, 2, 2, 2, 0, 0, 0, 0, -1, -1]),
                    ("two_sgn", vec![2, -2, -2, 2, 0, 0, 0, 0, -1, 1]),
                    ("std3", vec![3, 3, -1, -1, 1, 1, -1, -1, 0, 0]),
                    ("std3_sgn", vec![3, -3, 1, -1, -1, 1, -1, 1, 0, 0]),
                    ("refl", vec![3, -3, 1, -1, 1, -1, 1, -1, 0, 0]),
                    ("refl_sgn", vec![3, 3, -1, -1, -1, -1, 1, 1, 0, 0]),
                ],
            }
        }
        _ => {
            return Err(Error::RankCapExceeded(rs.rank, 3));
        }
    };
    Ok(c)
}

pub fn character_table(rs: &RootSystem, w: &WeylGroup) -> Result<WCharTable> {
    let catalog = catalog_for(rs)?;
    let prints = fingerprint_classes(rs, w);
    assert_eq!(prints.len(), catalog.prints.len(), "class count");

    // catalog class index per group class
    let perm: Vec<usize> = prints
        .iter()
        .map(|p| {
            catalog
                .prints
                .iter()
                .position(|q| q == p)
                .unwrap_or_else(|| panic!("no catalog class with fingerprint {p:?}"))
        })
        .collect();
    {
        let mut seen = perm.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), perm.len(), "fingerprints identify classes uniquely");
    }

    let table = WCharTable {
        classes: w.classes.clone(),
        class_rep: w.classes.iter().map(|c| c[0]).collect(),
        class_size: w.classes.iter().map(|c| c.len()).collect(),
        names: catalog.chars.iter().map(|(n, _)| n.to_string()).collect(),
        values: catalog
            .chars
            .iter()
            .map(|(_, vals)| perm.iter().map(|&pc| rint(vals[pc])).collect())
            .collect(),
    };

    // certify the catalog: first and second orthogonality
    let order: usize = table.class_size.iter().sum();
    assert_eq!(order, w.elements.len());
    let k = table.names.len();
    for a in 0..k {
        for b in 0..k {
            let mut ip = Rat::zero();
            for c in 0..k {
                ip += rint(table.class_size[c] as i64) * &table.values[a][c] * &table.values[b][c];
            }
            let expect = if a == b { rint(order as i64) } else { Rat::zero() };
            assert_eq!(ip, expect, "row orthogonality ({a},{b})");
        }
    }
    let sum_sq: Rat = (0..k).map(|a| table.degree(a) * table.degree(a)).sum();
    assert_eq!(sum_sq, rint(order as i64), "Σ deg² = |W|");

    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::rootsys::weyl::WeylGroup;

    #[test]
    fn all_rank_le3_tables_load_and_certify() {
        for (f, r) in [
            ('A', 1),
            ('A', 2),
            ('A', 3),
            ('B', 2),
            ('C', 2),
            ('B', 3),
            ('C', 3),
            ('D', 3),
            ('G', 2),
        ] {
            let rs = build_root_system(f, r).unwrap();
            let w = WeylGroup::new(&rs);
            let t = character_table(&rs, &w).unwrap();
            assert_eq!(t.names.len(), t.classes.len(), "{f}{r}: square table");
        }
    }

    #[test]
    fn defining_representation_decomposes_as_refl() {
        for (f, r, refl_name) in [('A', 2, "refl"), ('B', 2, "refl"), ('B', 3, "refl")] {
            let rs = build_root_system(f, r).unwrap();
            let w = WeylGroup::new(&rs);
            let t = character_table(&rs, &w).unwrap();
            let traces: Vec<Rat> = t
                .class_rep
                .iter()
                .map(|&e| super::trace(&w.elements[e].matrix))
                .collect();
            let dec = t.decompose(&traces).unwrap();
            assert_eq!(dec, vec![(refl_name.to_string(), 1)], "{f}{r}");
        }
    }

    #[test]
    fn regular_representation_contains_each_char_by_degree() {
        let rs = build_root_system('G', 2).unwrap();
        let w = WeylGroup::new(&rs);
        let t = character_table(&rs, &w).unwrap();
        // regular character: |W| at the identity, 0 elsewhere
        let traces: Vec<Rat> = t
            .classes
            .iter()
            .map(|c| if c[0] == 0 { rint(12) } else { Rat::zero() })
            .collect();
        let dec = t.decompose(&traces).unwrap();
        for (name, m) in dec {
            let chi = t.char_index(&name).unwrap();
            assert_eq!(rint(m as i64), *t.degree(chi));
        }
    }

    #[test]
    fn non_class_functions_are_rejected() {
        let rs = build_root_system('A', 2).unwrap();
        let w = WeylGroup::new(&rs);
        let t = character_table(&rs, &w).unwrap();
        // (1, 0, 0) pairs with triv as 1/6
        let bad = vec![rint(1), rint(0), rint(0)];
        assert!(matches!(
            t.decompose(&bad),
            Err(Error::NonIntegralMultiplicity(_))
        ));
    }
}
