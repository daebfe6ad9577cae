//! Small loops and Hopf structures used as fixtures and sweep material.

use crate::actions::{ActionData, CoactionData};
use crate::exactla::FieldDesc;
use crate::longdimod::{
    build_from_comodule, build_from_quasimodule, lset_dimodule, tensor_dimodule, trivial_action_dimodule,
    trivial_coaction_dimodule, unit_dimodule, LongDimodule,
};
use crate::loops::{loop_algebra, LoopTable};
use crate::structures::{dualize, HopfCoquasigroup, HopfQuasigroup};

pub fn cyclic(n: usize) -> LoopTable {
    LoopTable::from_rows((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
        .expect("cyclic table is square")
}

/// `L1 × L2` with `(a, b)` at index `a * |L2| + b`.
pub fn direct_product(l1: &LoopTable, l2: &LoopTable) -> LoopTable {
    let (n1, n2) = (l1.order(), l2.order());
    let rows = (0..n1 * n2)
        .map(|x| {
            (0..n1 * n2)
                .map(|y| l1.mul(x / n2, y / n2) * n2 + l2.mul(x % n2, y % n2))
                .collect()
        })
        .collect();
    LoopTable::from_rows(rows).expect("product table is square")
}

/// Index of `r^a s^h` in [`s3`].
pub fn s3_index(a: usize, h: usize) -> usize {
    h * 3 + a
}

/// The symmetric group on three letters as the dihedral group:
/// `r^a s^h` sits at index `3h + a`, with `s r s = r⁻¹`.
pub fn s3() -> LoopTable {
    let rows = (0..6)
        .map(|x| {
            let (a, h) = (x % 3, x / 3);
            (0..6)
                .map(|y| {
                    let (b, g) = (y % 3, y / 3);
                    let b = if h == 1 { (3 - b) % 3 } else { b };
                    s3_index((a + b) % 3, (h + g) % 2)
                })
                .collect()
        })
        .collect();
    LoopTable::from_rows(rows).expect("S3 table is square")
}

/// The smallest nonassociative IP loop, as produced by the order-7 search.
pub fn loop7() -> LoopTable {
    LoopTable::from_rows(vec![
        vec![0, 1, 2, 3, 4, 5, 6],
        vec![1, 2, 0, 4, 5, 6, 3],
        vec![2, 0, 1, 6, 3, 4, 5],
        vec![3, 6, 4, 5, 1, 0, 2],
        vec![4, 3, 5, 2, 6, 1, 0],
        vec![5, 4, 6, 0, 2, 3, 1],
        vec![6, 5, 3, 1, 0, 2, 4],
    ])
    .expect("fixture table is square")
}

/// The sixteen signed octonion units `±e_i`; `+e_i` at index `i`, `-e_i` at `i + 8`.
pub fn octonion_units() -> LoopTable {
    const LINES: [[usize; 3]; 7] = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];
    // product of basis units as (sign flip, unit)
    let unit_mul = |i: usize, j: usize| -> (bool, usize) {
        if i == 0 {
            return (false, j);
        }
        if j == 0 {
            return (false, i);
        }
        if i == j {
            return (true, 0);
        }
        for l in LINES {
            for r in 0..3 {
                if l[r] == i && l[(r + 1) % 3] == j {
                    return (false, l[(r + 2) % 3]);
                }
                if l[r] == j && l[(r + 1) % 3] == i {
                    return (true, l[(r + 2) % 3]);
                }
            }
        }
        unreachable!("every pair of imaginary units lies on one line")
    };
    let rows = (0..16)
        .map(|x| {
            (0..16)
                .map(|y| {
                    let (flip, k) = unit_mul(x % 8, y % 8);
                    let negative = flip ^ (x >= 8) ^ (y >= 8);
                    k + if negative { 8 } else { 0 }
                })
                .collect()
        })
        .collect();
    LoopTable::from_rows(rows).expect("octonion table is square")
}

pub fn group_algebra(t: &LoopTable, field: FieldDesc) -> HopfQuasigroup {
    loop_algebra(t, field).expect("catalog tables are IP loops")
}

/// Functions on a loop: the dual of its loop algebra.
pub fn function_algebra(t: &LoopTable, field: FieldDesc) -> HopfCoquasigroup {
    dualize(&group_algebra(t, field))
}

/// Named Long dimodules covering both variants, every construction, and
/// the spaces of dimension 1 to 49.
pub fn dimodule_fixtures() -> Vec<(String, LongDimodule)> {
    let q = FieldDesc::Rationals;
    let c2 = group_algebra(&cyclic(2), q);
    let c3 = group_algebra(&cyclic(3), q);
    let g6 = group_algebra(&s3(), q);
    let l7 = group_algebra(&loop7(), q);
    let f2 = function_algebra(&cyclic(2), q);
    let f6 = function_algebra(&s3(), q);
    let f7 = function_algebra(&loop7(), q);
    let ok = |r: crate::Result<LongDimodule>| r.expect("fixture preconditions hold");

    let c2_triv_co = ok(trivial_coaction_dimodule(&c2, &ActionData::regular(&c2)));
    let c2_triv_act = ok(trivial_action_dimodule(&c2, &CoactionData::regular(&c2)));
    let l7_m_h = ok(build_from_quasimodule(&l7, &ActionData::trivial(&l7, 1)));
    let l7_h_m = ok(build_from_comodule(&l7, &CoactionData::trivial(&l7, 1)));
    let f7_triv_act = ok(trivial_action_dimodule(&f7, &CoactionData::regular(&f7)));
    let f7_triv_co = ok(trivial_coaction_dimodule(&f7, &ActionData::regular(&f7)));

    let out = vec![
        ("unit over Q[C2]".to_string(), unit_dimodule(&c2)),
        ("M(x)H, M = Q[C2] by mult".into(), ok(build_from_quasimodule(&c2, &ActionData::regular(&c2)))),
        ("H(x)M, Q[S3], M = (H, delta)".into(), ok(build_from_comodule(&g6, &CoactionData::regular(&g6)))),
        ("H(x)M, Q[C3], M graded".into(), ok(build_from_comodule(&c3, &CoactionData::graded(q, 3, &[1, 2, 0, 1])))),
        ("trivial coaction, Q[C2] by mult".into(), c2_triv_co.clone()),
        ("trivial action, Q[S3] by delta".into(), ok(trivial_action_dimodule(&g6, &CoactionData::regular(&g6)))),
        ("trivial coaction, loop7 by mult".into(), ok(trivial_coaction_dimodule(&l7, &ActionData::regular(&l7)))),
        ("graded L-sets over loop7".into(), ok(lset_dimodule(&l7, &[3, 5]))),
        ("tensor of half-trivial types over Q[C2]".into(), ok(tensor_dimodule(&c2_triv_co, &c2_triv_act))),
        ("M(x)H, M = loop7 by mult".into(), ok(build_from_quasimodule(&l7, &ActionData::regular(&l7)))),
        ("tensor of M(x)H and H(x)M over loop7".into(), ok(tensor_dimodule(&l7_m_h, &l7_h_m))),
        ("co: unit over k^C2".into(), unit_dimodule(&f2)),
        ("co: H(x)M, k^S3, M = (H, delta)".into(), ok(build_from_comodule(&f6, &CoactionData::regular(&f6)))),
        ("co: trivial coaction, k^S3 by mult".into(), ok(trivial_coaction_dimodule(&f6, &ActionData::regular(&f6)))),
        ("co: trivial action, k^loop7 by delta".into(), f7_triv_act.clone()),
        ("co: H(x)M, k^loop7, M = (H, delta)".into(), ok(build_from_comodule(&f7, &CoactionData::regular(&f7)))),
        ("co: M(x)H, k^loop7, M = H by mult".into(), ok(build_from_quasimodule(&f7, &ActionData::regular(&f7)))),
        ("co: tensor of half-trivial types over k^loop7".into(), ok(tensor_dimodule(&f7_triv_act, &f7_triv_co))),
    ];
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::{check_ip_loop, is_associative};

    #[test]
    fn catalog_tables_are_ip_loops() {
        for t in [cyclic(1), cyclic(4), s3(), direct_product(&cyclic(2), &cyclic(3)), loop7(), octonion_units()] {
            assert!(check_ip_loop(&t).all_pass());
        }
    }

    #[test]
    fn s3_is_a_nonabelian_group() {
        let t = s3();
        assert!(is_associative(&t));
        assert_ne!(t.mul(1, 3), t.mul(3, 1));
    }

    #[test]
    fn loop7_is_nonassociative() {
        assert!(!is_associative(&loop7()));
    }

    #[test]
    fn octonion_units_form_a_nonassociative_loop() {
        let t = octonion_units();
        assert!(!is_associative(&t));
        // e1 e2 = e4 and e2 e1 = -e4
        assert_eq!(t.mul(1, 2), 4);
        assert_eq!(t.mul(2, 1), 12);
    }
}
