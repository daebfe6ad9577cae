//! Long dimodules over Hopf quasigroups and Hopf coquasigroups, their
//! standard constructions, and the D-equation solution they induce.

use std::sync::Arc;

use crate::actions::{
    comodule_laws, counit_right, diagonal_action, module_laws, quasicomodule_laws, quasimodule_laws, tensor_coaction,
    ActionData, CoactionData,
};
use crate::error::{Error, Result};
use crate::exactla::{kron, FieldDesc, Matrix};
use crate::report::{check_laws, Law, VerificationReport};
use crate::structures::{tensor2, Elem, Elem2, Elem3, HopfCoquasigroup, HopfData, HopfQuasigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Quasimodule and coassociative comodule.
    OverQuasigroup,
    /// Associative module and quasicomodule.
    OverCoquasigroup,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::OverQuasigroup => "quasigroup",
            Variant::OverCoquasigroup => "coquasigroup",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "quasigroup" => Some(Variant::OverQuasigroup),
            "coquasigroup" => Some(Variant::OverCoquasigroup),
            _ => None,
        }
    }
}

/// Which kind of Hopf structure a wrapper carries.
pub trait HopfKind {
    const VARIANT: Variant;
    fn data(&self) -> &Arc<HopfData>;
}

impl HopfKind for HopfQuasigroup {
    const VARIANT: Variant = Variant::OverQuasigroup;
    fn data(&self) -> &Arc<HopfData> {
        self.shared()
    }
}

impl HopfKind for HopfCoquasigroup {
    const VARIANT: Variant = Variant::OverCoquasigroup;
    fn data(&self) -> &Arc<HopfData> {
        self.shared()
    }
}

#[derive(Clone, Debug)]
pub struct LongDimodule {
    variant: Variant,
    hopf: Arc<HopfData>,
    act: ActionData,
    coact: CoactionData,
}

impl LongDimodule {
    /// Pairs an action and a coaction on the same space; no laws are checked.
    pub fn new(variant: Variant, hopf: Arc<HopfData>, act: ActionData, coact: CoactionData) -> Result<Self> {
        let n = hopf.dim();
        if act.h_dim() != n || coact.h_dim() != n {
            return Err(Error::dims(format!(
                "dimodule over dim H = {n} with action over {} and coaction over {}",
                act.h_dim(),
                coact.h_dim()
            )));
        }
        if act.m_dim() != coact.m_dim() {
            return Err(Error::dims(format!(
                "action on a {}-dimensional space, coaction on a {}-dimensional space",
                act.m_dim(),
                coact.m_dim()
            )));
        }
        Ok(LongDimodule { variant, hopf, act, coact })
    }

    pub fn over<H: HopfKind>(h: &H, act: ActionData, coact: CoactionData) -> Result<Self> {
        LongDimodule::new(H::VARIANT, h.data().clone(), act, coact)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }

    pub fn action(&self) -> &ActionData {
        &self.act
    }

    pub fn coaction(&self) -> &CoactionData {
        &self.coact
    }

    pub fn dim(&self) -> usize {
        self.act.m_dim()
    }

    pub fn field(&self) -> FieldDesc {
        self.hopf.field()
    }
}

fn e(field: FieldDesc, i: usize) -> Elem {
    Elem::single(i, field.one())
}

fn ldm1_law<'a>(h: &'a HopfData, act: &'a ActionData, co: &'a CoactionData) -> Law<'a> {
    Law::new("ldm1", vec![h.dim(), act.m_dim()], move |i| {
        let lhs = co.coact(act.act_basis(i[0], i[1]));
        let mut rhs = Elem2::new();
        for (&(m0, m1), c) in co.coact_basis(i[1]).iter() {
            rhs.add_scaled(&tensor2(act.act_basis(i[0], m0), &e(h.field(), m1)), c);
        }
        (lhs, rhs)
    })
}

/// The variant's action and coaction laws, then the compatibility law.
pub fn check_long_dimodule(d: &LongDimodule) -> VerificationReport {
    let (h, act, co) = (&*d.hopf, &d.act, &d.coact);
    let mut laws = match d.variant {
        Variant::OverQuasigroup => {
            let mut l = quasimodule_laws(h, act);
            l.extend(comodule_laws(h, co));
            l
        }
        Variant::OverCoquasigroup => {
            let mut l = module_laws(h, act);
            l.extend(quasicomodule_laws(h, co));
            l
        }
    };
    laws.push(ldm1_law(h, act, co));
    check_laws(&laws)
}

fn action_report(variant: Variant, h: &HopfData, act: &ActionData) -> Result<VerificationReport> {
    if act.h_dim() != h.dim() {
        return Err(Error::dims(format!("action over dim {} given for dim H = {}", act.h_dim(), h.dim())));
    }
    Ok(match variant {
        Variant::OverQuasigroup => check_laws(&quasimodule_laws(h, act)),
        Variant::OverCoquasigroup => check_laws(&module_laws(h, act)),
    })
}

fn coaction_report(variant: Variant, h: &HopfData, co: &CoactionData) -> Result<VerificationReport> {
    if co.h_dim() != h.dim() {
        return Err(Error::dims(format!("coaction over dim {} given for dim H = {}", co.h_dim(), h.dim())));
    }
    Ok(match variant {
        Variant::OverQuasigroup => check_laws(&comodule_laws(h, co)),
        Variant::OverCoquasigroup => check_laws(&quasicomodule_laws(h, co)),
    })
}

fn require(report: VerificationReport) -> Result<()> {
    if report.all_pass() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(Box::new(report)))
    }
}

/// `M ⊗ H` with action `ρ_M ⊗ id` and coaction `id ⊗ Δ`. Over a
/// quasigroup `M` must be a quasimodule, over a coquasigroup a module.
pub fn build_from_quasimodule<H: HopfKind>(h: &H, act: &ActionData) -> Result<LongDimodule> {
    let hd = h.data();
    require(action_report(H::VARIANT, hd, act)?)?;
    let (n, dm, f) = (hd.dim(), act.m_dim(), hd.field());
    let action = ActionData::from_fn(f, n, dm * n, |x, mk| act.act_basis(x, mk / n).map_keys(|&m| m * n + mk % n));
    let coaction = CoactionData::from_fn(f, dm * n, n, |mk| {
        let m = mk / n;
        hd.delta_basis(mk % n).map_keys(|&(a, b)| (m * n + a, b))
    });
    LongDimodule::over(h, action, coaction)
}

/// `H ⊗ M` with action `μ ⊗ id` and coaction `id ⊗ ρ^M`. Over a
/// quasigroup `M` must be a comodule, over a coquasigroup a quasicomodule.
pub fn build_from_comodule<H: HopfKind>(h: &H, co: &CoactionData) -> Result<LongDimodule> {
    let hd = h.data();
    require(coaction_report(H::VARIANT, hd, co)?)?;
    let (n, dm, f) = (hd.dim(), co.m_dim(), hd.field());
    let action = ActionData::from_fn(f, n, n * dm, |x, km| hd.mul_basis(x, km / dm).map_keys(|&k| k * dm + km % dm));
    let coaction = CoactionData::from_fn(f, n * dm, n, |km| {
        let k = km / dm;
        co.coact_basis(km % dm).map_keys(|&(m0, m1)| (k * dm + m0, m1))
    });
    LongDimodule::over(h, action, coaction)
}

/// `m ↦ m ⊗ 1` together with the given action.
pub fn trivial_coaction_dimodule<H: HopfKind>(h: &H, act: &ActionData) -> Result<LongDimodule> {
    let hd = h.data();
    require(action_report(H::VARIANT, hd, act)?)?;
    LongDimodule::over(h, act.clone(), CoactionData::trivial(hd, act.m_dim()))
}

/// `h·m = ε(h)m` together with the given coaction.
pub fn trivial_action_dimodule<H: HopfKind>(h: &H, co: &CoactionData) -> Result<LongDimodule> {
    let hd = h.data();
    require(coaction_report(H::VARIANT, hd, co)?)?;
    LongDimodule::over(h, ActionData::trivial(hd, co.m_dim()), co.clone())
}

/// The one-dimensional dimodule `(k, ε, 1)`.
pub fn unit_dimodule<H: HopfKind>(h: &H) -> LongDimodule {
    let hd = h.data();
    LongDimodule::over(h, ActionData::trivial(hd, 1), CoactionData::trivial(hd, 1)).expect("dims agree")
}

/// Copies of `H` acting on itself by multiplication, copy `j` coacting by
/// `x ↦ x ⊗ e_{grades[j]}`. For loop algebras this is a direct sum of
/// graded `L`-sets.
pub fn lset_dimodule(h: &HopfQuasigroup, grades: &[usize]) -> Result<LongDimodule> {
    let n = h.dim();
    if let Some(&g) = grades.iter().find(|&&g| g >= n) {
        return Err(Error::dims(format!("grade {g} out of range for dim H = {n}")));
    }
    let f = h.field();
    let dm = grades.len() * n;
    let action = ActionData::from_fn(f, n, dm, |x, jy| h.mul_basis(x, jy % n).map_keys(|&z| jy / n * n + z));
    let grade: Vec<usize> = (0..dm).map(|jy| grades[jy / n]).collect();
    LongDimodule::over(h, action, CoactionData::graded(f, n, &grade))
}

/// Diagonal action and tensor coaction on `M ⊗ N`.
pub fn tensor_dimodule(d1: &LongDimodule, d2: &LongDimodule) -> Result<LongDimodule> {
    if d1.variant != d2.variant || !(Arc::ptr_eq(&d1.hopf, &d2.hopf) || d1.hopf.same_tensors(&d2.hopf)) {
        return Err(Error::HMismatch);
    }
    let h = &*d1.hopf;
    let act = diagonal_action(h, &d1.act, &d2.act)?;
    let coact = tensor_coaction(h, &d1.coact, &d2.coact)?;
    LongDimodule::new(d1.variant, d1.hopf.clone(), act, coact)
}

// ---------------------------------------------------------------------------
// lemma identities

/// `Σ S(m^(1)_(2))·m^(0) ⊗ m^(1)_(1)`, optionally acted on by `h`.
fn lemma_rhs(h: &HopfData, act: &ActionData, co: &CoactionData, m: usize, outer: Option<usize>) -> Elem2 {
    let f = h.field();
    let mut out = Elem2::new();
    for (&(m0, m1), c) in co.coact_basis(m).iter() {
        for (&(a, b), d) in h.delta_basis(m1).iter() {
            let mut v = act.act(h.s_basis(b), &e(f, m0));
            if let Some(x) = outer {
                v = act.act_on(x, &v);
            }
            out.add_scaled(&tensor2(&v, &e(f, a)), &(c * d));
        }
    }
    out
}

/// `S(m^(1))·m^(0)`
fn twisted(h: &HopfData, act: &ActionData, co: &CoactionData, m: usize) -> Elem {
    let mut out = Elem::new();
    for (&(m0, m1), c) in co.coact_basis(m).iter() {
        out.add_scaled(&act.act(h.s_basis(m1), &e(h.field(), m0)), c);
    }
    out
}

pub fn lemma_laws(d: &LongDimodule) -> Vec<Law<'_>> {
    let (h, act, co) = (&*d.hopf, &d.act, &d.coact);
    let (tag1, tag2) = match d.variant {
        Variant::OverQuasigroup => ("ldmp1", "ldmp2"),
        Variant::OverCoquasigroup => ("ldmcp1", "ldmcp2"),
    };
    vec![
        Law::new(tag1, vec![d.dim()], move |i| (co.coact(&twisted(h, act, co, i[0])), lemma_rhs(h, act, co, i[0], None))),
        Law::new(tag2, vec![h.dim(), d.dim()], move |i| {
            let lhs = co.coact(&act.act_on(i[0], &twisted(h, act, co, i[1])));
            (lhs, lemma_rhs(h, act, co, i[1], Some(i[0])))
        }),
    ]
}

/// `ρ(S(m^(1))·m^(0)) = S(m^(1)_(2))·m^(0) ⊗ m^(1)_(1)` and its `h`-translate.
pub fn check_lemma_identities(d: &LongDimodule) -> VerificationReport {
    check_laws(&lemma_laws(d))
}

// ---------------------------------------------------------------------------
// adjunctions

/// Unit `η_M = ρ^M`, counit `σ_N = id ⊗ ε` of the free dimodule
/// `N ↦ N ⊗ H` on quasimodules, checked element-wise.
pub fn check_adjunction(d: &LongDimodule, n: &ActionData) -> Result<VerificationReport> {
    if d.variant != Variant::OverQuasigroup {
        return Err(Error::VariantMismatch { expected: "quasigroup" });
    }
    let (h, act, co) = (&*d.hopf, &d.act, &d.coact);
    if n.h_dim() != h.dim() {
        return Err(Error::dims(format!("quasimodule over dim {} for dim H = {}", n.h_dim(), h.dim())));
    }
    let f = h.field();
    let (hn, dm, dn) = (h.dim(), d.dim(), n.m_dim());
    let laws = vec![
        // η_M(h·m) = (ρ_M ⊗ id)(h ⊗ ρ^M(m))
        Law::new("adj.unit_linear", vec![hn, dm], move |i| {
            let lhs = co.coact(act.act_basis(i[0], i[1]));
            let rhs = co.coact_basis(i[1]).flat_map(|&(m0, m1)| tensor2(act.act_basis(i[0], m0), &e(f, m1)));
            (lhs, rhs)
        }),
        // (η_M ⊗ id) η_M = (id ⊗ Δ) η_M
        Law::new("adj.unit_colinear", vec![dm], move |i| {
            let mut lhs = Elem3::new();
            let mut rhs = Elem3::new();
            for (&(m0, m1), c) in co.coact_basis(i[0]).iter() {
                lhs.add_scaled(&co.coact_basis(m0).map_keys(|&(a, b)| (a, b, m1)), c);
                rhs.add_scaled(&h.delta_basis(m1).map_keys(|&(a, b)| (m0, a, b)), c);
            }
            (lhs, rhs)
        }),
        // σ_M ∘ η_M = id
        Law::new("adj.triangle_forget", vec![dm], move |i| (counit_right(h, co.coact_basis(i[0])), e(f, i[0]))),
        // (σ_N ⊗ id) ∘ (id ⊗ Δ) = id on N ⊗ H
        Law::new("adj.triangle_free", vec![dn, hn], move |i| {
            let mut lhs = Elem2::new();
            for (&(a, b), c) in h.delta_basis(i[1]).iter() {
                lhs.add_term((i[0], b), c * h.eps_basis(a));
            }
            (lhs, Elem2::single((i[0], i[1]), f.one()))
        }),
        // σ_N(h·(n ⊗ k)) = h·σ_N(n ⊗ k)
        Law::new("adj.counit_linear", vec![hn, dn, hn], move |i| {
            let lhs = n.act_basis(i[0], i[1]).scaled(h.eps_basis(i[2]));
            let rhs = n.act_on(i[0], &e(f, i[1]).scaled(h.eps_basis(i[2])));
            (lhs, rhs)
        }),
    ];
    Ok(check_laws(&laws))
}

/// Unit `η_N = 1 ⊗ id`, counit `σ_M = ρ_M` of `N ↦ H ⊗ N` on
/// (quasi)comodules. Over a quasigroup only the unit's colinearity and the
/// triangular identities are checked; the counit's linearity relies on an
/// associative action and is omitted there.
pub fn check_coadjunction(d: &LongDimodule, n: &CoactionData) -> Result<VerificationReport> {
    let (h, act, co) = (&*d.hopf, &d.act, &d.coact);
    if n.h_dim() != h.dim() {
        return Err(Error::dims(format!("comodule over dim {} for dim H = {}", n.h_dim(), h.dim())));
    }
    let f = h.field();
    let (hn, dm, dn) = (h.dim(), d.dim(), n.m_dim());
    let mut laws = vec![
        // ρ^{H⊗N}(1 ⊗ n) = (η_N ⊗ id) ρ^N(n)
        Law::new("coadj.unit_colinear", vec![dn], move |i| {
            let mut lhs = Elem3::new();
            let mut rhs = Elem3::new();
            for (&u, c) in h.one().iter() {
                lhs.add_scaled(&n.coact_basis(i[0]).map_keys(|&(a, b)| (u, a, b)), c);
            }
            for (&(n0, n1), c) in n.coact_basis(i[0]).iter() {
                for (&u, c2) in h.one().iter() {
                    rhs.add_term((u, n0, n1), c * c2);
                }
            }
            (lhs, rhs)
        }),
        // σ_M ∘ η_M = id
        Law::new("coadj.triangle_forget", vec![dm], move |i| (act.act(h.one(), &e(f, i[0])), e(f, i[0]))),
        // σ_{H⊗N} ∘ (id ⊗ η_N) = id on H ⊗ N
        Law::new("coadj.triangle_free", vec![hn, dn], move |i| {
            let lhs = h.mul(&e(f, i[0]), h.one()).map_keys(|&k| (k, i[1]));
            (lhs, Elem2::single((i[0], i[1]), f.one()))
        }),
    ];
    if d.variant == Variant::OverCoquasigroup {
        laws.push(Law::new("coadj.counit_linear", vec![hn, hn, dm], move |i| {
            let lhs = act.act(h.mul_basis(i[0], i[1]), &e(f, i[2]));
            let rhs = act.act_on(i[0], act.act_basis(i[1], i[2]));
            (lhs, rhs)
        }));
        laws.push(Law::new("coadj.counit_colinear", vec![hn, dm], move |i| {
            let lhs = co.coact(act.act_basis(i[0], i[1]));
            let rhs = co.coact_basis(i[1]).flat_map(|&(m0, m1)| tensor2(act.act_basis(i[0], m0), &e(f, m1)));
            (lhs, rhs)
        }));
    }
    Ok(check_laws(&laws))
}

// ---------------------------------------------------------------------------
// D-equation

/// An endomorphism of `M ⊗ M`, stored by columns: `cols[p]` is the image of
/// the `p`-th flattened basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMap {
    dim: usize,
    field: FieldDesc,
    cols: Vec<Elem>,
}

/// Largest `dim M` for which [`check_d_equation`] builds `n³ × n³` matrices.
pub const DENSE_D_LIMIT: usize = 8;

impl RMap {
    pub fn from_columns(field: FieldDesc, dim: usize, cols: Vec<Elem>) -> Result<Self> {
        let n2 = dim * dim;
        if cols.len() != n2 || cols.iter().any(|c| c.iter().any(|(&k, _)| k >= n2)) {
            return Err(Error::dims(format!("R on M ⊗ M needs {n2} columns with entries below {n2}")));
        }
        Ok(RMap { dim, field, cols })
    }

    pub fn from_matrix(m: &Matrix, dim: usize) -> Result<Self> {
        if m.rows() != dim * dim || m.cols() != dim * dim {
            return Err(Error::dims(format!("{}x{} matrix is not an endomorphism of M ⊗ M for dim M = {dim}", m.rows(), m.cols())));
        }
        let cols = (0..m.cols()).map(|j| Elem::from_terms(m.column_nonzeros(j))).collect();
        Ok(RMap { dim, field: m.field(), cols })
    }

    pub fn identity(field: FieldDesc, dim: usize) -> Self {
        RMap { dim, field, cols: (0..dim * dim).map(|p| e(field, p)).collect() }
    }

    /// `e_m ⊗ e_n ↦ e_{pi(m,n)}`
    pub fn from_permutation(field: FieldDesc, dim: usize, pi: &[usize]) -> Result<Self> {
        RMap::from_columns(field, dim, pi.iter().map(|&p| e(field, p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn column(&self, p: usize) -> &Elem {
        &self.cols[p]
    }

    pub fn is_identity(&self) -> bool {
        self.cols.iter().enumerate().all(|(p, c)| c.len() == 1 && c.coeff(&p).is_some_and(|s| s.is_one()))
    }

    pub fn to_matrix(&self) -> Matrix {
        let n2 = self.dim * self.dim;
        let mut m = Matrix::zeros(self.field, n2, n2);
        for (j, c) in self.cols.iter().enumerate() {
            for (&i, s) in c.iter() {
                m.set(i, j, s.clone());
            }
        }
        m
    }

    /// Image of a flattened vector of `M ⊗ M`.
    pub fn image(&self, x: &Elem) -> Elem {
        let mut out = Elem::new();
        for (&p, c) in x.iter() {
            out.add_scaled(&self.cols[p], c);
        }
        out
    }

    /// `R` on legs 1,2 of `M ⊗ M ⊗ M`.
    fn apply12(&self, x: &Elem3) -> Elem3 {
        let n = self.dim;
        let mut out = Elem3::new();
        for (&(a, b, c), s) in x.iter() {
            for (&q, t) in self.cols[a * n + b].iter() {
                out.add_term((q / n, q % n, c), s * t);
            }
        }
        out
    }

    /// `R` on legs 2,3 of `M ⊗ M ⊗ M`.
    fn apply23(&self, x: &Elem3) -> Elem3 {
        let n = self.dim;
        let mut out = Elem3::new();
        for (&(a, b, c), s) in x.iter() {
            for (&q, t) in self.cols[b * n + c].iter() {
                out.add_term((a, q / n, q % n), s * t);
            }
        }
        out
    }
}

/// `R(m ⊗ n) = n^(1)·m ⊗ n^(0)`
pub fn d_map(d: &LongDimodule) -> RMap {
    let n = d.dim();
    let f = d.field();
    let cols = (0..n * n)
        .map(|p| {
            let (m, k) = (p / n, p % n);
            let mut out = Elem::new();
            for (&(k0, k1), c) in d.coact.coact_basis(k).iter() {
                for (&x, s) in d.act.act_basis(k1, m).iter() {
                    out.add_term(x * n + k0, c * s);
                }
            }
            out
        })
        .collect();
    RMap { dim: n, field: f, cols }
}

/// `R¹²R²³ = R²³R¹²` on every basis triple of `M ⊗ M ⊗ M`.
pub fn check_d_equation(r: &RMap) -> VerificationReport {
    let n = r.dim;
    if n <= DENSE_D_LIMIT {
        let id = Matrix::identity(r.field, n);
        let rm = r.to_matrix();
        let r12 = kron(&rm, &id).expect("same field");
        let r23 = kron(&id, &rm).expect("same field");
        let lhs = r12.matmul(&r23).expect("square");
        let rhs = r23.matmul(&r12).expect("square");
        let to3 = |v: Vec<(usize, _)>| {
            Elem3::from_terms(v.into_iter().map(|(p, s)| ((p / (n * n), p / n % n, p % n), s)))
        };
        let law = Law::new("eq.d", vec![n, n, n], move |i| {
            let col = (i[0] * n + i[1]) * n + i[2];
            (to3(lhs.column_nonzeros(col)), to3(rhs.column_nonzeros(col)))
        });
        check_laws(&[law])
    } else {
        let f = r.field;
        let law = Law::new("eq.d", vec![n, n, n], move |i| {
            let x = Elem3::single((i[0], i[1], i[2]), f.one());
            (r.apply12(&r.apply23(&x)), r.apply23(&r.apply12(&x)))
        });
        check_laws(&[law])
    }
}
