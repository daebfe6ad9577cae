//! Actions and coactions as standalone tensors, with checkers for
//! quasimodules, modules, comodules, quasicomodules and the module
//! algebra/coalgebra layers.

use crate::error::{Error, Result};
use crate::exactla::{FieldDesc, Tensor3};
use crate::report::{check_laws, Law, VerificationReport};
use crate::structures::{tensor2, AlgebraData, CoalgebraData, Elem, Elem2, Elem3, HopfData};

/// `h · e_m = Σ_{m'} rho[h][m][m'] e_{m'}`
#[derive(Clone, Debug)]
pub struct ActionData {
    rho: Tensor3,
    images: Vec<Elem>,
}

impl ActionData {
    pub fn new(rho: Tensor3) -> Result<Self> {
        let [h, m, m2] = rho.dims();
        if m != m2 {
            return Err(Error::dims(format!("action tensor {h}x{m}x{m2} is not of shape HxMxM")));
        }
        let images = rho.fibers().into_iter().map(Elem::from_terms).collect();
        Ok(ActionData { rho, images })
    }

    pub fn from_fn(field: FieldDesc, h_dim: usize, m_dim: usize, f: impl Fn(usize, usize) -> Elem) -> Self {
        let mut rho = Tensor3::zeros(field, h_dim, m_dim, m_dim);
        for h in 0..h_dim {
            for m in 0..m_dim {
                for (&k, c) in f(h, m).iter() {
                    rho.set(h, m, k, c.clone());
                }
            }
        }
        ActionData::new(rho).expect("square by construction")
    }

    /// `h · e_m = e_{f(h, m)}`
    pub fn from_basis_map(field: FieldDesc, h_dim: usize, m_dim: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        ActionData::from_fn(field, h_dim, m_dim, |h, m| Elem::single(f(h, m), field.one()))
    }

    /// `H` acting on itself by multiplication.
    pub fn regular(h: &HopfData) -> Self {
        ActionData::from_fn(h.field(), h.dim(), h.dim(), |a, b| h.mul_basis(a, b).clone())
    }

    /// `h · m = ε(h) m`
    pub fn trivial(h: &HopfData, m_dim: usize) -> Self {
        ActionData::from_fn(h.field(), h.dim(), m_dim, |a, m| Elem::single(m, h.eps_basis(a).clone()))
    }

    pub fn h_dim(&self) -> usize {
        self.rho.dims()[0]
    }

    pub fn m_dim(&self) -> usize {
        self.rho.dims()[1]
    }

    pub fn field(&self) -> FieldDesc {
        self.rho.field()
    }

    pub fn rho(&self) -> &Tensor3 {
        &self.rho
    }

    pub fn act_basis(&self, h: usize, m: usize) -> &Elem {
        &self.images[h * self.m_dim() + m]
    }

    pub fn act_on(&self, h: usize, m: &Elem) -> Elem {
        let mut out = Elem::new();
        for (&k, c) in m.iter() {
            out.add_scaled(self.act_basis(h, k), c);
        }
        out
    }

    pub fn act(&self, h: &Elem, m: &Elem) -> Elem {
        let mut out = Elem::new();
        for (&a, c) in h.iter() {
            out.add_scaled(&self.act_on(a, m), c);
        }
        out
    }

    pub fn same_tensor(&self, other: &ActionData) -> bool {
        self.rho == other.rho
    }
}

/// `ρ(e_m) = Σ rho[m][m'][h] e_{m'} ⊗ e_h`
#[derive(Clone, Debug)]
pub struct CoactionData {
    rho: Tensor3,
    images: Vec<Elem2>,
}

impl CoactionData {
    pub fn new(rho: Tensor3) -> Result<Self> {
        let [m, m2, h] = rho.dims();
        if m != m2 {
            return Err(Error::dims(format!("coaction tensor {m}x{m2}x{h} is not of shape MxMxH")));
        }
        let mut images = vec![Elem2::new(); m];
        for ([a, b, c], s) in rho.nonzeros() {
            images[a].add_term((b, c), s.clone());
        }
        Ok(CoactionData { rho, images })
    }

    pub fn from_fn(field: FieldDesc, m_dim: usize, h_dim: usize, f: impl Fn(usize) -> Elem2) -> Self {
        let mut rho = Tensor3::zeros(field, m_dim, m_dim, h_dim);
        for m in 0..m_dim {
            for (&(k, h), c) in f(m).iter() {
                rho.set(m, k, h, c.clone());
            }
        }
        CoactionData::new(rho).expect("square by construction")
    }

    /// `H` coacting on itself by `Δ`.
    pub fn regular(h: &HopfData) -> Self {
        CoactionData::from_fn(h.field(), h.dim(), h.dim(), |a| h.delta_basis(a).clone())
    }

    /// `m ↦ m ⊗ 1`
    pub fn trivial(h: &HopfData, m_dim: usize) -> Self {
        CoactionData::from_fn(h.field(), m_dim, h.dim(), |m| tensor2(&e(h.field(), m), h.one()))
    }

    /// `e_m ↦ e_m ⊗ e_{grade[m]}`
    pub fn graded(field: FieldDesc, h_dim: usize, grade: &[usize]) -> Self {
        CoactionData::from_fn(field, grade.len(), h_dim, |m| Elem2::single((m, grade[m]), field.one()))
    }

    /// `c ↦ Σ_x (x·c) ⊗ δ_x`: an action of a basis of `H*` read as a
    /// coaction of `H`, with `δ_x` the dual basis.
    pub fn from_action(act: &ActionData) -> Self {
        let [h, m, _] = act.rho().dims();
        let mut rho = Tensor3::zeros(act.field(), m, m, h);
        for ([x, c, c2], s) in act.rho().nonzeros() {
            rho.set(c, c2, x, s.clone());
        }
        CoactionData::new(rho).expect("square by construction")
    }

    pub fn m_dim(&self) -> usize {
        self.rho.dims()[0]
    }

    pub fn h_dim(&self) -> usize {
        self.rho.dims()[2]
    }

    pub fn field(&self) -> FieldDesc {
        self.rho.field()
    }

    pub fn rho(&self) -> &Tensor3 {
        &self.rho
    }

    pub fn coact_basis(&self, m: usize) -> &Elem2 {
        &self.images[m]
    }

    pub fn coact(&self, m: &Elem) -> Elem2 {
        let mut out = Elem2::new();
        for (&k, c) in m.iter() {
            out.add_scaled(self.coact_basis(k), c);
        }
        out
    }

    pub fn same_tensor(&self, other: &CoactionData) -> bool {
        self.rho == other.rho
    }
}

fn e(field: FieldDesc, i: usize) -> Elem {
    Elem::single(i, field.one())
}

fn expect_h(h: &HopfData, dim: usize, what: &str) -> Result<()> {
    if h.dim() != dim {
        return Err(Error::dims(format!("{what} is over a {dim}-dimensional H, got dim H = {}", h.dim())));
    }
    Ok(())
}

fn expect_dim(expected: usize, got: usize, what: &str) -> Result<()> {
    if expected != got {
        return Err(Error::dims(format!("{what}: expected dimension {expected}, got {got}")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// elementwise helpers shared with other modules

/// Applies `f` to the left and right legs of a two-fold tensor.
pub fn map2(x: &Elem2, mut f: impl FnMut(usize, usize) -> Elem2) -> Elem2 {
    let mut out = Elem2::new();
    for (&(a, b), c) in x.iter() {
        out.add_scaled(&f(a, b), c);
    }
    out
}

/// `(id ⊗ ε)` on `M ⊗ H`
pub fn counit_right(h: &HopfData, x: &Elem2) -> Elem {
    let mut out = Elem::new();
    for (&(m, a), c) in x.iter() {
        out.add_term(m, c * h.eps_basis(a));
    }
    out
}

// ---------------------------------------------------------------------------
// law builders

pub fn quasimodule_laws<'a>(h: &'a HopfData, act: &'a ActionData) -> Vec<Law<'a>> {
    let (n, d, f) = (h.dim(), act.m_dim(), h.field());
    vec![
        Law::new("qm2.unit", vec![d], move |i| (act.act(h.one(), &e(f, i[0])), e(f, i[0]))),
        Law::new("qm2.left", vec![n, d], move |i| {
            let m = e(f, i[1]);
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                lhs.add_scaled(&act.act_on(a, &act.act(h.s_basis(b), &m)), c);
            }
            (lhs, m.scaled(h.eps_basis(i[0])))
        }),
        Law::new("qm2.right", vec![n, d], move |i| {
            let m = e(f, i[1]);
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                lhs.add_scaled(&act.act(h.s_basis(a), act.act_basis(b, i[1])), c);
            }
            (lhs, m.scaled(h.eps_basis(i[0])))
        }),
    ]
}

pub fn module_laws<'a>(h: &'a HopfData, act: &'a ActionData) -> Vec<Law<'a>> {
    let (n, d, f) = (h.dim(), act.m_dim(), h.field());
    vec![
        Law::new("mod.unit", vec![d], move |i| (act.act(h.one(), &e(f, i[0])), e(f, i[0]))),
        Law::new("mod.assoc", vec![n, n, d], move |i| {
            let lhs = act.act_on(i[0], act.act_basis(i[1], i[2]));
            let rhs = act.act(h.mul_basis(i[0], i[1]), &e(f, i[2]));
            (lhs, rhs)
        }),
    ]
}

pub fn comodule_laws<'a>(h: &'a HopfData, co: &'a CoactionData) -> Vec<Law<'a>> {
    let d = co.m_dim();
    let f = h.field();
    vec![
        Law::new("comod.counit", vec![d], move |i| (counit_right(h, co.coact_basis(i[0])), e(f, i[0]))),
        Law::new("comod.coassoc", vec![d], move |i| {
            let mut lhs = Elem3::new();
            let mut rhs = Elem3::new();
            for (&(m0, m1), c) in co.coact_basis(i[0]).iter() {
                for (&(m00, m01), c2) in co.coact_basis(m0).iter() {
                    lhs.add_term((m00, m01, m1), c * c2);
                }
                for (&(a, b), c2) in h.delta_basis(m1).iter() {
                    rhs.add_term((m0, a, b), c * c2);
                }
            }
            (lhs, rhs)
        }),
    ]
}

pub fn quasicomodule_laws<'a>(h: &'a HopfData, co: &'a CoactionData) -> Vec<Law<'a>> {
    let d = co.m_dim();
    let f = h.field();
    let m_one = move |m: usize| tensor2(&e(f, m), h.one());
    // m^(0)(0) ⊗ g(m^(0)(1), m^(1))
    let twisted = move |m: usize, g: &dyn Fn(usize, usize) -> Elem| {
        let mut out = Elem2::new();
        for (&(m0, m1), c) in co.coact_basis(m).iter() {
            for (&(m00, m01), c2) in co.coact_basis(m0).iter() {
                out.add_scaled(&tensor2(&e(f, m00), &g(m01, m1)), &(c * c2));
            }
        }
        out
    };
    vec![
        Law::new("cqm2.counit", vec![d], move |i| (counit_right(h, co.coact_basis(i[0])), e(f, i[0]))),
        Law::new("cqm2.left", vec![d], move |i| {
            (twisted(i[0], &|x, y| h.mul(&e(f, x), h.s_basis(y))), m_one(i[0]))
        }),
        Law::new("cqm2.right", vec![d], move |i| {
            (twisted(i[0], &|x, y| h.mul(h.s_basis(x), &e(f, y))), m_one(i[0]))
        }),
    ]
}

pub fn qm_algebra_laws<'a>(h: &'a HopfData, a: &'a AlgebraData, act: &'a ActionData) -> Vec<Law<'a>> {
    let (n, d) = (h.dim(), a.dim());
    vec![
        Law::new("qmalg.mult", vec![n, d, d], move |i| {
            let mut lhs = Elem::new();
            for (&(h1, h2), c) in h.delta_basis(i[0]).iter() {
                lhs.add_scaled(&a.mul(act.act_basis(h1, i[1]), act.act_basis(h2, i[2])), c);
            }
            (lhs, act.act_on(i[0], a.mul_basis(i[1], i[2])))
        }),
        Law::new("qmalg.unit", vec![n], move |i| (act.act_on(i[0], a.one()), a.one().scaled(h.eps_basis(i[0])))),
    ]
}

pub fn qm_coalgebra_laws<'a>(h: &'a HopfData, c: &'a CoalgebraData, act: &'a ActionData) -> Vec<Law<'a>> {
    let (n, d) = (h.dim(), c.dim());
    vec![
        Law::new("qmcoalg.delta", vec![n, d], move |i| {
            let lhs = c.coproduct(act.act_basis(i[0], i[1]));
            let mut rhs = Elem2::new();
            for (&(h1, h2), s) in h.delta_basis(i[0]).iter() {
                for (&(c1, c2), t) in c.coproduct_basis(i[1]).iter() {
                    rhs.add_scaled(&tensor2(act.act_basis(h1, c1), act.act_basis(h2, c2)), &(s * t));
                }
            }
            (lhs, rhs)
        }),
        Law::new("qmcoalg.counit", vec![n, d], move |i| {
            let lhs = c.eps(act.act_basis(i[0], i[1]));
            let rhs = h.eps_basis(i[0]) * c.eps_basis(i[1]);
            (Elem::single(0, lhs), Elem::single(0, rhs))
        }),
    ]
}

pub fn antipode_linear_law<'a>(h: &'a HopfData, a: &'a HopfData, act: &'a ActionData) -> Law<'a> {
    Law::new("hlin.antipode", vec![h.dim(), a.dim()], move |i| {
        (a.s(act.act_basis(i[0], i[1])), act.act_on(i[0], a.s_basis(i[1])))
    })
}

/// Product in `A ⊗ H` of two elements there.
fn mul_a_h(a: &AlgebraData, h: &HopfData, x: &Elem2, y: &Elem2) -> Elem2 {
    let mut out = Elem2::new();
    for (&(a1, h1), c) in x.iter() {
        for (&(a2, h2), d) in y.iter() {
            out.add_scaled(&tensor2(a.mul_basis(a1, a2), h.mul_basis(h1, h2)), &(c * d));
        }
    }
    out
}

pub fn coqm_algebra_laws<'a>(h: &'a HopfData, a: &'a AlgebraData, co: &'a CoactionData) -> Vec<Law<'a>> {
    let d = a.dim();
    vec![
        Law::new("coqmalg.mult", vec![d, d], move |i| {
            let lhs = co.coact(a.mul_basis(i[0], i[1]));
            let rhs = mul_a_h(a, h, co.coact_basis(i[0]), co.coact_basis(i[1]));
            (lhs, rhs)
        }),
        Law::new("coqmalg.unit", vec![], move |_| (co.coact(a.one()), tensor2(a.one(), h.one()))),
    ]
}

pub fn coqm_coalgebra_laws<'a>(h: &'a HopfData, c: &'a CoalgebraData, co: &'a CoactionData) -> Vec<Law<'a>> {
    let d = c.dim();
    vec![
        Law::new("coqmcoalg.delta", vec![d], move |i| {
            let mut lhs = Elem3::new();
            for (&(c0, c1), s) in co.coact_basis(i[0]).iter() {
                for (&(x, y), t) in c.coproduct_basis(c0).iter() {
                    lhs.add_term((x, y, c1), s * t);
                }
            }
            let mut rhs = Elem3::new();
            for (&(x, y), s) in c.coproduct_basis(i[0]).iter() {
                for (&(x0, x1), t) in co.coact_basis(x).iter() {
                    for (&(y0, y1), u) in co.coact_basis(y).iter() {
                        let coeff = &(s * t) * u;
                        for (&k, v) in h.mul_basis(x1, y1).iter() {
                            rhs.add_term((x0, y0, k), &coeff * v);
                        }
                    }
                }
            }
            (lhs, rhs)
        }),
        Law::new("coqmcoalg.counit", vec![d], move |i| {
            let mut lhs = Elem::new();
            for (&(c0, c1), s) in co.coact_basis(i[0]).iter() {
                lhs.add_term(c1, s * c.eps_basis(c0));
            }
            (lhs, h.one().scaled(c.eps_basis(i[0])))
        }),
    ]
}

pub fn antipode_colinear_law<'a>(c: &'a HopfData, co: &'a CoactionData) -> Law<'a> {
    let f = c.field();
    Law::new("hcolin.antipode", vec![c.dim()], move |i| {
        let lhs = co.coact(c.s_basis(i[0]));
        let rhs = map2(co.coact_basis(i[0]), |c0, c1| tensor2(c.s_basis(c0), &e(f, c1)));
        (lhs, rhs)
    })
}

// ---------------------------------------------------------------------------
// checkers

/// `1·m = m` and both antipode cancellation identities.
pub fn check_quasimodule(h: &HopfData, act: &ActionData) -> Result<VerificationReport> {
    expect_h(h, act.h_dim(), "action")?;
    Ok(check_laws(&quasimodule_laws(h, act)))
}

/// Unitality and strict associativity `h·(g·m) = (hg)·m`.
pub fn check_module(h: &HopfData, act: &ActionData) -> Result<VerificationReport> {
    expect_h(h, act.h_dim(), "action")?;
    Ok(check_laws(&module_laws(h, act)))
}

pub fn check_comodule(h: &HopfData, co: &CoactionData) -> Result<VerificationReport> {
    expect_h(h, co.h_dim(), "coaction")?;
    Ok(check_laws(&comodule_laws(h, co)))
}

pub fn check_quasicomodule(h: &HopfData, co: &CoactionData) -> Result<VerificationReport> {
    expect_h(h, co.h_dim(), "coaction")?;
    Ok(check_laws(&quasicomodule_laws(h, co)))
}

pub fn check_qm_algebra(h: &HopfData, a: &AlgebraData, act: &ActionData) -> Result<VerificationReport> {
    expect_h(h, act.h_dim(), "action")?;
    expect_dim(act.m_dim(), a.dim(), "acted-on algebra")?;
    Ok(check_laws(&qm_algebra_laws(h, a, act)))
}

pub fn check_qm_coalgebra(h: &HopfData, c: &CoalgebraData, act: &ActionData) -> Result<VerificationReport> {
    expect_h(h, act.h_dim(), "action")?;
    expect_dim(act.m_dim(), c.dim(), "acted-on coalgebra")?;
    Ok(check_laws(&qm_coalgebra_laws(h, c, act)))
}

/// `S_A(h·a) = h·S_A(a)`
pub fn check_antipode_linear(h: &HopfData, a: &HopfData, act: &ActionData) -> Result<VerificationReport> {
    expect_h(h, act.h_dim(), "action")?;
    expect_dim(act.m_dim(), a.dim(), "acted-on Hopf structure")?;
    Ok(check_laws(&[antipode_linear_law(h, a, act)]))
}

pub fn check_coqm_algebra(h: &HopfData, a: &AlgebraData, co: &CoactionData) -> Result<VerificationReport> {
    expect_h(h, co.h_dim(), "coaction")?;
    expect_dim(co.m_dim(), a.dim(), "coacted-on algebra")?;
    Ok(check_laws(&coqm_algebra_laws(h, a, co)))
}

pub fn check_coqm_coalgebra(h: &HopfData, c: &CoalgebraData, co: &CoactionData) -> Result<VerificationReport> {
    expect_h(h, co.h_dim(), "coaction")?;
    expect_dim(co.m_dim(), c.dim(), "coacted-on coalgebra")?;
    Ok(check_laws(&coqm_coalgebra_laws(h, c, co)))
}

/// `ρ(S_C(c)) = S_C(c^(0)) ⊗ c^(1)`
pub fn check_antipode_colinear(h: &HopfData, c: &HopfData, co: &CoactionData) -> Result<VerificationReport> {
    expect_h(h, co.h_dim(), "coaction")?;
    expect_dim(co.m_dim(), c.dim(), "coacted-on Hopf structure")?;
    Ok(check_laws(&[antipode_colinear_law(c, co)]))
}

// ---------------------------------------------------------------------------
// monoidal structure

/// `h·(m⊗n) = h_(1)·m ⊗ h_(2)·n` on the flattened `M ⊗ N`.
pub fn diagonal_action(h: &HopfData, a1: &ActionData, a2: &ActionData) -> Result<ActionData> {
    expect_h(h, a1.h_dim(), "first action")?;
    expect_h(h, a2.h_dim(), "second action")?;
    let (dm, dn) = (a1.m_dim(), a2.m_dim());
    Ok(ActionData::from_fn(h.field(), h.dim(), dm * dn, |x, mn| {
        let (m, n) = (mn / dn, mn % dn);
        let mut out = Elem::new();
        for (&(x1, x2), c) in h.delta_basis(x).iter() {
            for (&p, s) in a1.act_basis(x1, m).iter() {
                for (&q, t) in a2.act_basis(x2, n).iter() {
                    out.add_term(p * dn + q, &(c * s) * t);
                }
            }
        }
        out
    }))
}

/// `m⊗n ↦ m^(0) ⊗ n^(0) ⊗ m^(1) n^(1)` on the flattened `M ⊗ N`.
pub fn tensor_coaction(h: &HopfData, c1: &CoactionData, c2: &CoactionData) -> Result<CoactionData> {
    expect_h(h, c1.h_dim(), "first coaction")?;
    expect_h(h, c2.h_dim(), "second coaction")?;
    let (dm, dn) = (c1.m_dim(), c2.m_dim());
    Ok(CoactionData::from_fn(h.field(), dm * dn, h.dim(), |mn| {
        let (m, n) = (mn / dn, mn % dn);
        let mut out = Elem2::new();
        for (&(m0, m1), s) in c1.coact_basis(m).iter() {
            for (&(n0, n1), t) in c2.coact_basis(n).iter() {
                let st = s * t;
                for (&k, u) in h.mul_basis(m1, n1).iter() {
                    out.add_term((m0 * dn + n0, k), &st * u);
                }
            }
        }
        out
    }))
}
