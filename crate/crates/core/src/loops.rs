//! Inverse-property loops as Cayley tables, their loop algebras, and an
//! exhaustive search for small orders.
//!
//! Element 0 is always the identity.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactla::{FieldDesc, LinComb, Matrix, Tensor3, Vector};
use crate::report::{check_laws, fact, Law, Side, VerificationReport, Witness};
use crate::structures::{HopfData, HopfQuasigroup};

/// Largest order for which [`search_ip_loops`] is exhaustive.
pub const MAX_SEARCH_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopTable {
    n: usize,
    cells: Vec<usize>,
}

impl LoopTable {
    /// Accepts any square table with entries in range; loop axioms are left
    /// to [`check_ip_loop`].
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (a, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::MalformedTable(format!("entry {x} in row {a} is out of range 0..{n}")));
            }
            cells.extend(row);
        }
        Ok(LoopTable { n, cells })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// The two-sided inverse of `a`, if one exists.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.n).find(|&b| self.mul(a, b) == 0 && self.mul(b, a) == 0)
    }

    /// Relabels elements by `perm` (old index to new index).
    pub fn relabel(&self, perm: &[usize]) -> LoopTable {
        let n = self.n;
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        LoopTable { n, cells }
    }

    /// Lexicographically smallest relabeling that keeps 0 fixed.
    pub fn canonical(&self) -> LoopTable {
        let n = self.n;
        if n <= 2 {
            return self.clone();
        }
        // perm maps new label -> old label while searching
        let mut best: Option<Vec<usize>> = None;
        let mut rest: Vec<usize> = (1..n).collect();
        let mut inv = vec![0usize; n];
        permute_all(&mut rest, 0, &mut |order| {
            // order[k] = old label that receives new label k+1
            let mut new_to_old = Vec::with_capacity(n);
            new_to_old.push(0);
            new_to_old.extend_from_slice(order);
            for (new, &old) in new_to_old.iter().enumerate() {
                inv[old] = new;
            }
            match &best {
                None => best = Some(self.relabel_cells(&new_to_old, &inv)),
                Some(current) => {
                    if let Some(c) = self.relabel_if_smaller(&new_to_old, &inv, current) {
                        best = Some(c);
                    }
                }
            }
        });
        LoopTable { n, cells: best.expect("at least one permutation") }
    }

    fn relabel_cells(&self, new_to_old: &[usize], old_to_new: &[usize]) -> Vec<usize> {
        let n = self.n;
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(old_to_new[self.mul(new_to_old[a], new_to_old[b])]);
            }
        }
        cells
    }

    fn relabel_if_smaller(&self, new_to_old: &[usize], old_to_new: &[usize], best: &[usize]) -> Option<Vec<usize>> {
        let n = self.n;
        for a in 1..n {
            for b in 1..n {
                let v = old_to_new[self.mul(new_to_old[a], new_to_old[b])];
                let w = best[a * n + b];
                if v < w {
                    return Some(self.relabel_cells(new_to_old, old_to_new));
                }
                if v > w {
                    return None;
                }
            }
        }
        None
    }

    /// Permutations fixing 0 that preserve the table, as old-to-new maps.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = Vec::new();
        let mut rest: Vec<usize> = (1..n).collect();
        permute_all(&mut rest, 0, &mut |order| {
            let mut perm = Vec::with_capacity(n);
            perm.push(0);
            perm.extend_from_slice(order);
            let ok = (0..n).all(|a| (0..n).all(|b| perm[self.mul(a, b)] == self.mul(perm[a], perm[b])));
            if ok {
                out.push(perm);
            }
        });
        out.sort();
        out
    }
}

fn permute_all(xs: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute_all(xs, k + 1, f);
        xs.swap(k, i);
    }
}

fn elem(x: usize) -> LinComb<usize> {
    LinComb::single(x, FieldDesc::Rationals.one())
}

/// Multiset of values as a combination, for Latin-square witnesses.
fn multiset(values: impl Iterator<Item = usize>) -> Side {
    let mut v = LinComb::new();
    for x in values {
        v.add_term(x, FieldDesc::Rationals.one());
    }
    Side::from(&v)
}

fn latin_fact(law_id: &str, t: &LoopTable, line: impl Fn(usize) -> Vec<usize>) -> crate::report::ReportEntry {
    let n = t.order();
    let witness = (0..n).find_map(|a| {
        let values = line(a);
        let mut seen = vec![false; n];
        let mut ok = true;
        for &x in &values {
            ok &= !std::mem::replace(&mut seen[x], true);
        }
        (!ok).then(|| Witness {
            index: vec![a],
            lhs: multiset(values.into_iter()),
            rhs: multiset(0..n),
        })
    });
    fact(law_id, n, witness)
}

/// Latin-square, identity, two-sided inverse and the four IP identities
/// `a(a⁻¹b) = a⁻¹(ab) = (ba⁻¹)a = (ba)a⁻¹ = b`, quantified over all `(a, b)`.
pub fn check_ip_loop(t: &LoopTable) -> VerificationReport {
    let n = t.order();
    let mut report = VerificationReport::new();
    report.push(latin_fact("loop.latin_rows", t, |a| (0..n).map(|b| t.mul(a, b)).collect()));
    report.push(latin_fact("loop.latin_cols", t, |b| (0..n).map(|a| t.mul(a, b)).collect()));
    let identity_witness = (0..n).find_map(|a| {
        (t.mul(0, a) != a || t.mul(a, 0) != a).then(|| Witness {
            index: vec![a],
            lhs: Side::from(&LinComb::from_terms([
                (0usize, FieldDesc::Rationals.one()),
                (1, FieldDesc::Rationals.int(t.mul(0, a) as i64)),
                (2, FieldDesc::Rationals.int(t.mul(a, 0) as i64)),
            ])),
            rhs: Side::from(&LinComb::from_terms([
                (0usize, FieldDesc::Rationals.one()),
                (1, FieldDesc::Rationals.int(a as i64)),
                (2, FieldDesc::Rationals.int(a as i64)),
            ])),
        })
    });
    report.push(fact("loop.identity", n, identity_witness));

    let inverses: Vec<Option<usize>> = (0..n).map(|a| t.inverse(a)).collect();
    let inverse_witness = inverses.iter().position(Option::is_none).map(|a| Witness {
        index: vec![a],
        lhs: Side::from(&LinComb::<usize>::new()),
        rhs: Side::from(&elem(0)),
    });
    report.push(fact("loop.inverse", n, inverse_witness));

    let inv = &inverses;
    // a missing inverse makes the left side the zero vector, so the law fails
    let with_inv = move |a: usize, f: &dyn Fn(usize) -> usize| inv[a].map_or_else(LinComb::new, |ai| elem(f(ai)));
    let laws = vec![
        Law::new("ip.left1", vec![n, n], move |i| {
            let (a, b) = (i[0], i[1]);
            (with_inv(a, &|ai| t.mul(a, t.mul(ai, b))), elem(b))
        }),
        Law::new("ip.left2", vec![n, n], move |i| {
            let (a, b) = (i[0], i[1]);
            (with_inv(a, &|ai| t.mul(ai, t.mul(a, b))), elem(b))
        }),
        Law::new("ip.right1", vec![n, n], move |i| {
            let (a, b) = (i[0], i[1]);
            (with_inv(a, &|ai| t.mul(t.mul(b, ai), a)), elem(b))
        }),
        Law::new("ip.right2", vec![n, n], move |i| {
            let (a, b) = (i[0], i[1]);
            (with_inv(a, &|ai| t.mul(t.mul(b, a), ai)), elem(b))
        }),
    ];
    report.extend(check_laws(&laws));
    report
}

/// First triple `(a, b, c)` with `(ab)c ≠ a(bc)`, in lexicographic order.
pub fn associativity_witness(t: &LoopTable) -> Option<[usize; 3]> {
    let n = t.order();
    (0..n).find_map(|a| {
        (0..n).find_map(|b| (0..n).find(|&c| t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))).map(|c| [a, b, c]))
    })
}

pub fn is_associative(t: &LoopTable) -> bool {
    associativity_witness(t).is_none()
}

/// The loop algebra `kL`: grouplike coproduct, `ε ≡ 1`, `S(a) = a⁻¹`.
pub fn loop_algebra(t: &LoopTable, field: FieldDesc) -> Result<HopfQuasigroup> {
    let report = check_ip_loop(t);
    if !report.all_pass() {
        return Err(Error::NotIpLoop(Box::new(report)));
    }
    let n = t.order();
    let one = field.one();
    let mut mu = Tensor3::zeros(field, n, n, n);
    let mut delta = Tensor3::zeros(field, n, n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            mu.set(a, b, t.mul(a, b), one.clone());
        }
        delta.set(a, a, a, one.clone());
        let ai = t.inverse(a).expect("checked IP loop");
        antipode.set(ai, a, one.clone());
    }
    let unit = Vector::basis(field, n, 0);
    let counit = Vector::from_vec(field, vec![one; n])?;
    Ok(HopfQuasigroup::new(HopfData::from_tensors(mu, unit, delta, counit, antipode)?))
}

// ---------------------------------------------------------------------------
// search

const EMPTY: usize = usize::MAX;

struct Partial {
    n: usize,
    inv: Vec<usize>,
    cells: Vec<usize>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    trail: Vec<usize>,
}

impl Partial {
    fn new(n: usize, inv: Vec<usize>) -> Option<Self> {
        let mut p = Partial {
            n,
            inv,
            cells: vec![EMPTY; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            trail: Vec::new(),
        };
        for a in 0..n {
            if !p.assign(0, a, a) || !p.assign(a, 0, a) {
                return None;
            }
            let ai = p.inv[a];
            if !p.assign(a, ai, 0) {
                return None;
            }
        }
        Some(p)
    }

    /// Sets `ab = c` and closes under `a⁻¹c = b` and `cb⁻¹ = a`.
    /// On conflict the partial assignment is left for the caller to undo.
    fn assign(&mut self, a: usize, b: usize, c: usize) -> bool {
        let mut stack = vec![(a, b, c)];
        while let Some((a, b, c)) = stack.pop() {
            let cell = a * self.n + b;
            match self.cells[cell] {
                EMPTY => {
                    let bit = 1u32 << c;
                    if self.row_used[a] & bit != 0 || self.col_used[b] & bit != 0 {
                        return false;
                    }
                    self.cells[cell] = c;
                    self.row_used[a] |= bit;
                    self.col_used[b] |= bit;
                    self.trail.push(cell);
                    stack.push((self.inv[a], c, b));
                    stack.push((c, self.inv[b], a));
                }
                v if v == c => {}
                _ => return false,
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().expect("nonempty trail");
            let (a, b) = (cell / self.n, cell % self.n);
            let bit = 1u32 << self.cells[cell];
            self.row_used[a] &= !bit;
            self.col_used[b] &= !bit;
            self.cells[cell] = EMPTY;
        }
    }

    fn solve(&mut self, found: &mut BTreeSet<LoopTable>, budget: &NodeBudget) {
        if !budget.take() {
            return;
        }
        // most constrained empty cell
        let mut pick = None;
        let mut fewest = u32::MAX;
        for cell in 0..self.n * self.n {
            if self.cells[cell] != EMPTY {
                continue;
            }
            let (a, b) = (cell / self.n, cell % self.n);
            let free = (!(self.row_used[a] | self.col_used[b]) & ((1u32 << self.n) - 1)).count_ones();
            if free < fewest {
                fewest = free;
                pick = Some(cell);
            }
        }
        let Some(cell) = pick else {
            let t = LoopTable { n: self.n, cells: self.cells.clone() };
            found.insert(t.canonical());
            return;
        };
        if fewest == 0 {
            return;
        }
        let (a, b) = (cell / self.n, cell % self.n);
        let free = !(self.row_used[a] | self.col_used[b]) & ((1u32 << self.n) - 1);
        for c in 0..self.n {
            if free & (1 << c) == 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(a, b, c) {
                self.solve(found, budget);
            }
            self.undo_to(mark);
        }
    }
}

struct NodeBudget {
    left: Option<AtomicU64>,
    spent: AtomicBool,
}

impl NodeBudget {
    fn take(&self) -> bool {
        let Some(left) = &self.left else { return true };
        if left.fetch_update(Ordering::Relaxed, Ordering::Relaxed, |n| n.checked_sub(1)).is_ok() {
            true
        } else {
            self.spent.store(true, Ordering::Relaxed);
            false
        }
    }
}

/// One inversion map per conjugacy class of involutions on the non-identity
/// elements: `fixed` self-inverse elements first, then adjacent pairs.
fn inversion_classes(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for fixed in 0..n {
        if !(n - 1 - fixed).is_multiple_of(2) {
            continue;
        }
        let mut inv: Vec<usize> = (0..n).collect();
        let mut k = fixed + 1;
        while k + 1 < n {
            inv[k] = k + 1;
            inv[k + 1] = k;
            k += 2;
        }
        out.push(inv);
    }
    out
}

/// All IP loops of order `n` up to isomorphism, as canonical tables sorted
/// lexicographically. With `want_nonassociative` only non-associative loops
/// are kept; `limit` truncates the sorted list.
pub fn search_ip_loops(n: usize, want_nonassociative: bool, limit: Option<usize>) -> Result<Vec<LoopTable>> {
    search_ip_loops_budgeted(n, want_nonassociative, limit, None)
}

/// [`search_ip_loops`] that gives up with `BudgetExceeded` after visiting
/// `max_nodes` search nodes.
pub fn search_ip_loops_budgeted(
    n: usize,
    want_nonassociative: bool,
    limit: Option<usize>,
    max_nodes: Option<u64>,
) -> Result<Vec<LoopTable>> {
    if n > MAX_SEARCH_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "order {n} is above the exhaustive limit {MAX_SEARCH_ORDER}"
        )));
    }
    if n == 0 {
        return Err(Error::MalformedTable("order must be positive".into()));
    }
    let budget = NodeBudget { left: max_nodes.map(AtomicU64::new), spent: AtomicBool::new(false) };
    let found: BTreeSet<LoopTable> = inversion_classes(n)
        .into_par_iter()
        .map(|inv| {
            let mut found = BTreeSet::new();
            if let Some(mut p) = Partial::new(n, inv) {
                p.solve(&mut found, &budget);
            }
            found
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    if budget.spent.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded(format!(
            "order {n} search needs more than {} nodes",
            max_nodes.unwrap_or(0)
        )));
    }
    let tables = found
        .into_iter()
        .filter(|t| {
            debug_assert!(check_ip_loop(t).all_pass());
            !want_nonassociative || !is_associative(t)
        })
        .take(limit.unwrap_or(usize::MAX))
        .collect();
    Ok(tables)
}
