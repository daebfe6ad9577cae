//! Finite-dimensional Hopf quasigroups and Hopf coquasigroups as structure
//! tensors, with exhaustive axiom checkers.
//!
//! Conventions: `e_i e_j = Σ_k mu[i][j][k] e_k`, `Δ(e_i) = Σ delta[i][j][k] e_j ⊗ e_k`,
//! `S(e_i) = Σ_j S[j][i] e_j` (columns are images), and `ε` is stored as the
//! vector of its values on the basis.

use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{FieldDesc, LinComb, Matrix, Scalar, Tensor3, Vector};
use crate::report::{check_laws, Law, VerificationReport};

pub type Elem = LinComb<usize>;
pub type Elem2 = LinComb<(usize, usize)>;
pub type Elem3 = LinComb<(usize, usize, usize)>;

/// `x ⊗ y`
pub fn tensor2(x: &Elem, y: &Elem) -> Elem2 {
    let mut out = Elem2::new();
    for (&i, a) in x.iter() {
        for (&j, b) in y.iter() {
            out.add_term((i, j), a * b);
        }
    }
    out
}

/// A unital, not necessarily associative algebra.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    mu: Tensor3,
    unit: Vector,
    products: Vec<Elem>,
    one: Elem,
}

impl AlgebraData {
    pub fn new(mu: Tensor3, unit: Vector) -> Result<Self> {
        let [a, b, c] = mu.dims();
        if a != b || b != c || unit.len() != a {
            return Err(Error::dims(format!(
                "product tensor {a}x{b}x{c} with unit of length {}",
                unit.len()
            )));
        }
        if unit.field() != mu.field() {
            return Err(Error::FieldMismatch(mu.field().to_string(), unit.field().to_string()));
        }
        let products = mu.fibers().into_iter().map(Elem::from_terms).collect();
        let one = Elem::from_terms(unit.nonzeros().map(|(i, s)| (i, s.clone())));
        Ok(AlgebraData { mu, unit, products, one })
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn field(&self) -> FieldDesc {
        self.mu.field()
    }

    pub fn mu(&self) -> &Tensor3 {
        &self.mu
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn one(&self) -> &Elem {
        &self.one
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        &self.products[i * self.dim() + j]
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::new();
        for (&i, a) in x.iter() {
            for (&j, b) in y.iter() {
                out.add_scaled(self.mul_basis(i, j), &(a * b));
            }
        }
        out
    }

    /// Product in `A ⊗ A` with the tensor-product algebra structure.
    pub fn mul2(&self, x: &Elem2, y: &Elem2) -> Elem2 {
        let mut out = Elem2::new();
        for (&(a, b), s) in x.iter() {
            for (&(c, d), t) in y.iter() {
                let st = s * t;
                for (&p, u) in self.mul_basis(a, c).iter() {
                    for (&q, v) in self.mul_basis(b, d).iter() {
                        out.add_term((p, q), &st * &(u * v));
                    }
                }
            }
        }
        out
    }
}

/// A counital, not necessarily coassociative coalgebra.
#[derive(Clone, Debug)]
pub struct CoalgebraData {
    delta: Tensor3,
    counit: Vector,
    coproducts: Vec<Elem2>,
}

impl CoalgebraData {
    pub fn new(delta: Tensor3, counit: Vector) -> Result<Self> {
        let [a, b, c] = delta.dims();
        if a != b || b != c || counit.len() != a {
            return Err(Error::dims(format!(
                "coproduct tensor {a}x{b}x{c} with counit of length {}",
                counit.len()
            )));
        }
        if counit.field() != delta.field() {
            return Err(Error::FieldMismatch(delta.field().to_string(), counit.field().to_string()));
        }
        let mut coproducts = vec![Elem2::new(); a];
        for ([i, j, k], s) in delta.nonzeros() {
            coproducts[i].add_term((j, k), s.clone());
        }
        Ok(CoalgebraData { delta, counit, coproducts })
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn field(&self) -> FieldDesc {
        self.delta.field()
    }

    pub fn delta(&self) -> &Tensor3 {
        &self.delta
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn coproduct_basis(&self, i: usize) -> &Elem2 {
        &self.coproducts[i]
    }

    pub fn coproduct(&self, x: &Elem) -> Elem2 {
        x.flat_map(|&i| self.coproducts[i].clone())
    }

    pub fn eps_basis(&self, i: usize) -> &Scalar {
        self.counit.get(i)
    }

    pub fn eps(&self, x: &Elem) -> Scalar {
        let mut acc = self.field().zero();
        for (&i, c) in x.iter() {
            acc = &acc + &(c * self.eps_basis(i));
        }
        acc
    }
}

/// Structure tensors of a Hopf (co)quasigroup candidate. No law is assumed;
/// the checkers below decide which laws hold.
#[derive(Clone, Debug)]
pub struct HopfData {
    alg: AlgebraData,
    coalg: CoalgebraData,
    antipode: Matrix,
    antipode_images: Vec<Elem>,
}

impl HopfData {
    pub fn new(alg: AlgebraData, coalg: CoalgebraData, antipode: Matrix) -> Result<Self> {
        let n = alg.dim();
        if coalg.dim() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(Error::dims(format!(
                "algebra dim {n}, coalgebra dim {}, antipode {}x{}",
                coalg.dim(),
                antipode.rows(),
                antipode.cols()
            )));
        }
        if alg.field() != coalg.field() || alg.field() != antipode.field() {
            return Err(Error::FieldMismatch(alg.field().to_string(), coalg.field().to_string()));
        }
        let antipode_images = (0..n).map(|j| Elem::from_terms(antipode.column_nonzeros(j))).collect();
        Ok(HopfData { alg, coalg, antipode, antipode_images })
    }

    pub fn from_tensors(mu: Tensor3, unit: Vector, delta: Tensor3, counit: Vector, antipode: Matrix) -> Result<Self> {
        Self::new(AlgebraData::new(mu, unit)?, CoalgebraData::new(delta, counit)?, antipode)
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> FieldDesc {
        self.alg.field()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.alg
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalg
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn basis(&self, i: usize) -> Elem {
        Elem::single(i, self.field().one())
    }

    pub fn one(&self) -> &Elem {
        self.alg.one()
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        self.alg.mul(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        self.alg.mul_basis(i, j)
    }

    pub fn delta_basis(&self, i: usize) -> &Elem2 {
        self.coalg.coproduct_basis(i)
    }

    pub fn delta(&self, x: &Elem) -> Elem2 {
        self.coalg.coproduct(x)
    }

    pub fn eps_basis(&self, i: usize) -> &Scalar {
        self.coalg.eps_basis(i)
    }

    pub fn eps(&self, x: &Elem) -> Scalar {
        self.coalg.eps(x)
    }

    pub fn s_basis(&self, i: usize) -> &Elem {
        &self.antipode_images[i]
    }

    pub fn s(&self, x: &Elem) -> Elem {
        x.flat_map(|&i| self.antipode_images[i].clone())
    }

    pub fn antipode_is_bijective(&self) -> bool {
        self.antipode.rank() == self.dim()
    }

    /// Structure on the dual basis: products and coproducts swap roles,
    /// unit and counit swap, the antipode is transposed.
    pub fn dual(&self) -> HopfData {
        let n = self.dim();
        let f = self.field();
        let mut mu = Tensor3::zeros(f, n, n, n);
        for ([k, i, j], s) in self.coalg.delta().nonzeros() {
            mu.set(i, j, k, s.clone());
        }
        let mut delta = Tensor3::zeros(f, n, n, n);
        for ([j, k, i], s) in self.alg.mu().nonzeros() {
            delta.set(i, j, k, s.clone());
        }
        HopfData::from_tensors(
            mu,
            self.coalg.counit().clone(),
            delta,
            self.alg.unit().clone(),
            self.antipode.transpose(),
        )
        .expect("dual of a consistent structure is consistent")
    }

    /// The same structure with basis vector `i` renamed `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> HopfData {
        let n = self.dim();
        let f = self.field();
        let mut mu = Tensor3::zeros(f, n, n, n);
        for ([i, j, k], s) in self.alg.mu().nonzeros() {
            mu.set(perm[i], perm[j], perm[k], s.clone());
        }
        let mut delta = Tensor3::zeros(f, n, n, n);
        for ([i, j, k], s) in self.coalg.delta().nonzeros() {
            delta.set(perm[i], perm[j], perm[k], s.clone());
        }
        let mut unit = Vector::zeros(f, n);
        let mut counit = Vector::zeros(f, n);
        let mut antipode = Matrix::zeros(f, n, n);
        for i in 0..n {
            unit.set(perm[i], self.alg.unit().get(i).clone());
            counit.set(perm[i], self.coalg.counit().get(i).clone());
            for j in 0..n {
                antipode.set(perm[i], perm[j], self.antipode.get(i, j).clone());
            }
        }
        HopfData::from_tensors(mu, unit, delta, counit, antipode).expect("relabeling keeps dimensions")
    }

    /// Exact equality of all structure tensors.
    pub fn same_tensors(&self, other: &HopfData) -> bool {
        self.alg.mu() == other.alg.mu()
            && self.alg.unit() == other.alg.unit()
            && self.coalg.delta() == other.coalg.delta()
            && self.coalg.counit() == other.coalg.counit()
            && self.antipode == other.antipode
    }
}

/// `X ⊗ Y` with componentwise structure; basis `(x, y)` at `x·dim Y + y`.
pub fn tensor_product(x: &HopfData, y: &HopfData) -> Result<HopfData> {
    if x.field() != y.field() {
        return Err(Error::FieldMismatch(x.field().to_string(), y.field().to_string()));
    }
    let (nx, ny, f) = (x.dim(), y.dim(), x.field());
    let n = nx * ny;
    let idx = |a: usize, b: usize| a * ny + b;
    let mut mu = Tensor3::zeros(f, n, n, n);
    let mut delta = Tensor3::zeros(f, n, n, n);
    let mut unit = Vector::zeros(f, n);
    let mut counit = Vector::zeros(f, n);
    let mut antipode = Matrix::zeros(f, n, n);
    for ([i, j, k], s) in x.alg.mu().nonzeros() {
        for ([p, q, r], t) in y.alg.mu().nonzeros() {
            mu.set(idx(i, p), idx(j, q), idx(k, r), s * t);
        }
    }
    for ([i, j, k], s) in x.coalg.delta().nonzeros() {
        for ([p, q, r], t) in y.coalg.delta().nonzeros() {
            delta.set(idx(i, p), idx(j, q), idx(k, r), s * t);
        }
    }
    for a in 0..nx {
        for b in 0..ny {
            unit.set(idx(a, b), x.alg.unit().get(a) * y.alg.unit().get(b));
            counit.set(idx(a, b), x.coalg.counit().get(a) * y.coalg.counit().get(b));
            for c in 0..nx {
                for d in 0..ny {
                    antipode.set(idx(a, b), idx(c, d), x.antipode.get(a, c) * y.antipode.get(b, d));
                }
            }
        }
    }
    HopfData::from_tensors(mu, unit, delta, counit, antipode)
}

/// Structure tensors intended as a Hopf quasigroup (coassociative Δ).
#[derive(Clone, Debug)]
pub struct HopfQuasigroup(Arc<HopfData>);

/// Structure tensors intended as a Hopf coquasigroup (associative μ).
#[derive(Clone, Debug)]
pub struct HopfCoquasigroup(Arc<HopfData>);

macro_rules! hopf_wrapper {
    ($t:ident) => {
        impl $t {
            pub fn new(data: HopfData) -> Self {
                $t(Arc::new(data))
            }

            pub fn shared(&self) -> &Arc<HopfData> {
                &self.0
            }
        }

        impl Deref for $t {
            type Target = HopfData;
            fn deref(&self) -> &HopfData {
                &self.0
            }
        }

        impl From<HopfData> for $t {
            fn from(d: HopfData) -> Self {
                $t::new(d)
            }
        }
    };
}

hopf_wrapper!(HopfQuasigroup);
hopf_wrapper!(HopfCoquasigroup);

pub fn dualize(h: &HopfQuasigroup) -> HopfCoquasigroup {
    HopfCoquasigroup::new(h.dual())
}

pub fn dualize_coquasigroup(h: &HopfCoquasigroup) -> HopfQuasigroup {
    HopfQuasigroup::new(h.dual())
}

// ---------------------------------------------------------------------------
// laws

pub fn unital_counital_laws(h: &HopfData) -> Vec<Law<'_>> {
    let n = h.dim();
    vec![
        Law::new("unit.left", vec![n], move |i| (h.mul(h.one(), &h.basis(i[0])), h.basis(i[0]))),
        Law::new("unit.right", vec![n], move |i| (h.mul(&h.basis(i[0]), h.one()), h.basis(i[0]))),
        Law::new("counit.left", vec![n], move |i| {
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                lhs.add_term(b, c * h.eps_basis(a));
            }
            (lhs, h.basis(i[0]))
        }),
        Law::new("counit.right", vec![n], move |i| {
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                lhs.add_term(a, c * h.eps_basis(b));
            }
            (lhs, h.basis(i[0]))
        }),
    ]
}

pub fn bialgebra_laws(h: &HopfData) -> Vec<Law<'_>> {
    let n = h.dim();
    let f = h.field();
    vec![
        Law::new("bialg.delta_mult", vec![n, n], move |i| {
            let lhs = h.delta(h.mul_basis(i[0], i[1]));
            let rhs = h.algebra().mul2(h.delta_basis(i[0]), h.delta_basis(i[1]));
            (lhs, rhs)
        }),
        Law::new("bialg.delta_unit", vec![], move |_| (h.delta(h.one()), tensor2(h.one(), h.one()))),
        Law::new("bialg.counit_mult", vec![n, n], move |i| {
            let lhs = h.eps(h.mul_basis(i[0], i[1]));
            let rhs = h.eps_basis(i[0]) * h.eps_basis(i[1]);
            (Elem::single(0, lhs), Elem::single(0, rhs))
        }),
        Law::new("bialg.counit_unit", vec![], move |_| {
            (Elem::single(0, h.eps(h.one())), Elem::single(0, f.one()))
        }),
    ]
}

fn coassoc_law(h: &HopfData) -> Law<'_> {
    Law::new("coassoc", vec![h.dim()], move |i| coassoc_sides(h, i[0]))
}

fn coassoc_sides(h: &HopfData, i: usize) -> (Elem3, Elem3) {
    let mut lhs = Elem3::new();
    let mut rhs = Elem3::new();
    for (&(a, b), c) in h.delta_basis(i).iter() {
        for (&(a1, a2), d) in h.delta_basis(a).iter() {
            lhs.add_term((a1, a2, b), c * d);
        }
        for (&(b1, b2), d) in h.delta_basis(b).iter() {
            rhs.add_term((a, b1, b2), c * d);
        }
    }
    (lhs, rhs)
}

fn assoc_law(h: &HopfData) -> Law<'_> {
    let n = h.dim();
    Law::new("assoc", vec![n, n, n], move |i| {
        let (x, y, z) = (i[0], i[1], i[2]);
        let lhs = h.mul(h.mul_basis(x, y), &h.basis(z));
        let rhs = h.mul(&h.basis(x), h.mul_basis(y, z));
        (lhs, rhs)
    })
}

pub fn quasi_laws(h: &HopfData) -> Vec<Law<'_>> {
    let n = h.dim();
    // Each identity is compared with ε(h) g.
    let rhs = move |hh: usize, g: usize| h.basis(g).scaled(h.eps_basis(hh));
    vec![
        coassoc_law(h),
        Law::new("quasi1.left", vec![n, n], move |i| {
            let (hh, g) = (i[0], i[1]);
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(hh).iter() {
                lhs.add_scaled(&h.mul(h.s_basis(a), h.mul_basis(b, g)), c);
            }
            (lhs, rhs(hh, g))
        }),
        Law::new("quasi1.right", vec![n, n], move |i| {
            let (hh, g) = (i[0], i[1]);
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(hh).iter() {
                lhs.add_scaled(&h.mul(&h.basis(a), &h.mul(h.s_basis(b), &h.basis(g))), c);
            }
            (lhs, rhs(hh, g))
        }),
        Law::new("quasi2.left", vec![n, n], move |i| {
            let (hh, g) = (i[0], i[1]);
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(hh).iter() {
                lhs.add_scaled(&h.mul(h.mul_basis(g, a), h.s_basis(b)), c);
            }
            (lhs, rhs(hh, g))
        }),
        Law::new("quasi2.right", vec![n, n], move |i| {
            let (hh, g) = (i[0], i[1]);
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(hh).iter() {
                lhs.add_scaled(&h.mul(&h.mul(&h.basis(g), h.s_basis(a)), &h.basis(b)), c);
            }
            (lhs, rhs(hh, g))
        }),
    ]
}

pub fn coq_laws(h: &HopfData) -> Vec<Law<'_>> {
    let n = h.dim();
    let one_h = move |x: usize| tensor2(h.one(), &h.basis(x));
    let h_one = move |x: usize| tensor2(&h.basis(x), h.one());
    vec![
        assoc_law(h),
        Law::new("coq1.left", vec![n], move |i| {
            let mut lhs = Elem2::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                for (&(b1, b2), d) in h.delta_basis(b).iter() {
                    let p = h.mul(h.s_basis(a), &h.basis(b1));
                    lhs.add_scaled(&tensor2(&p, &h.basis(b2)), &(c * d));
                }
            }
            (lhs, one_h(i[0]))
        }),
        Law::new("coq1.right", vec![n], move |i| {
            let mut lhs = Elem2::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                for (&(b1, b2), d) in h.delta_basis(b).iter() {
                    let p = h.mul(&h.basis(a), h.s_basis(b1));
                    lhs.add_scaled(&tensor2(&p, &h.basis(b2)), &(c * d));
                }
            }
            (lhs, one_h(i[0]))
        }),
        Law::new("coq2.left", vec![n], move |i| {
            let mut lhs = Elem2::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                for (&(a1, a2), d) in h.delta_basis(a).iter() {
                    let p = h.mul(&h.basis(a2), h.s_basis(b));
                    lhs.add_scaled(&tensor2(&h.basis(a1), &p), &(c * d));
                }
            }
            (lhs, h_one(i[0]))
        }),
        Law::new("coq2.right", vec![n], move |i| {
            let mut lhs = Elem2::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                for (&(a1, a2), d) in h.delta_basis(a).iter() {
                    let p = h.mul(h.s_basis(a2), &h.basis(b));
                    lhs.add_scaled(&tensor2(&h.basis(a1), &p), &(c * d));
                }
            }
            (lhs, h_one(i[0]))
        }),
    ]
}

pub fn antipode_laws(h: &HopfData) -> Vec<Law<'_>> {
    let n = h.dim();
    let eps_one = move |x: usize| h.one().scaled(h.eps_basis(x));
    vec![
        Law::new("antipode.left", vec![n], move |i| {
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                lhs.add_scaled(&h.mul(h.s_basis(a), &h.basis(b)), c);
            }
            (lhs, eps_one(i[0]))
        }),
        Law::new("antipode.right", vec![n], move |i| {
            let mut lhs = Elem::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                lhs.add_scaled(&h.mul(&h.basis(a), h.s_basis(b)), c);
            }
            (lhs, eps_one(i[0]))
        }),
        Law::new("antipode.antimult", vec![n, n], move |i| {
            let lhs = h.s(h.mul_basis(i[0], i[1]));
            let rhs = h.mul(h.s_basis(i[1]), h.s_basis(i[0]));
            (lhs, rhs)
        }),
        Law::new("antipode.anticomult", vec![n], move |i| {
            let lhs = h.delta(h.s_basis(i[0]));
            let mut rhs = Elem2::new();
            for (&(a, b), c) in h.delta_basis(i[0]).iter() {
                rhs.add_scaled(&tensor2(h.s_basis(b), h.s_basis(a)), c);
            }
            (lhs, rhs)
        }),
    ]
}

// ---------------------------------------------------------------------------
// checkers

pub fn check_unital_counital(h: &HopfData) -> VerificationReport {
    check_laws(&unital_counital_laws(h))
}

pub fn check_bialgebra_compat(h: &HopfData) -> VerificationReport {
    check_laws(&bialgebra_laws(h))
}

/// Coassociativity of Δ, then the four identities against `ε(h) g`.
pub fn check_quasi_identities(h: &HopfQuasigroup) -> VerificationReport {
    check_laws(&quasi_laws(h))
}

/// Associativity of μ, then the four identities against `1 ⊗ h` and `h ⊗ 1`.
pub fn check_coq_identities(h: &HopfCoquasigroup) -> VerificationReport {
    check_laws(&coq_laws(h))
}

pub fn check_antipode_basic(h: &HopfData) -> VerificationReport {
    check_laws(&antipode_laws(h))
}

pub fn check_associativity(h: &HopfData) -> VerificationReport {
    check_laws(&[assoc_law(h)])
}

pub fn check_coassociativity(h: &HopfData) -> VerificationReport {
    check_laws(&[coassoc_law(h)])
}

/// Every defining law of a Hopf quasigroup. Associativity of μ is included
/// as an informational entry.
pub fn hopf_quasigroup_suite(h: &HopfQuasigroup) -> VerificationReport {
    let mut r = check_unital_counital(h);
    r.extend(check_bialgebra_compat(h));
    r.extend(check_quasi_identities(h));
    r.extend(check_associativity(h).into_informational());
    r
}

/// Every defining law of a Hopf coquasigroup. Coassociativity of Δ is
/// included as an informational entry.
pub fn hopf_coquasigroup_suite(h: &HopfCoquasigroup) -> VerificationReport {
    let mut r = check_unital_counital(h);
    r.extend(check_bialgebra_compat(h));
    r.extend(check_coq_identities(h));
    r.extend(check_coassociativity(h).into_informational());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, group_algebra, loop7, s3};

    const Q: FieldDesc = FieldDesc::Rationals;

    fn with_antipode(h: &HopfData, s: Matrix) -> HopfData {
        let (a, c) = (h.algebra(), h.coalgebra());
        HopfData::from_tensors(a.mu().clone(), a.unit().clone(), c.delta().clone(), c.counit().clone(), s).unwrap()
    }

    fn witness(r: &VerificationReport, id: &str) -> Vec<usize> {
        r.entry(id).unwrap().witness.as_ref().unwrap().index.clone()
    }

    #[test]
    fn group_algebras_pass_both_suites() {
        for (t, f) in [(cyclic(2), Q), (s3(), Q), (s3(), FieldDesc::Prime(5)), (cyclic(3), FieldDesc::Prime(3))] {
            let h = group_algebra(&t, f);
            assert!(hopf_quasigroup_suite(&h).all_pass());
            assert!(check_antipode_basic(&h).all_pass());
            assert!(check_associativity(&h).all_pass());
            let d = dualize(&h);
            assert!(hopf_coquasigroup_suite(&d).all_pass());
            assert!(check_coassociativity(&d).all_pass());
        }
    }

    #[test]
    fn wrong_unit_fails_at_identity() {
        let h = group_algebra(&cyclic(2), Q);
        let (a, c) = (h.algebra(), h.coalgebra());
        let bad = HopfData::from_tensors(
            a.mu().clone(),
            Vector::basis(Q, 2, 1),
            c.delta().clone(),
            c.counit().clone(),
            h.antipode().clone(),
        )
        .unwrap();
        let r = check_unital_counital(&bad);
        assert!(!r.passed("unit.left"));
        assert_eq!(witness(&r, "unit.left"), vec![0]);
    }

    #[test]
    fn lopsided_coproduct_breaks_counit_not_multiplicativity() {
        let h = group_algebra(&cyclic(2), Q);
        let mut delta = h.coalgebra().delta().clone();
        delta.set(1, 1, 1, Q.zero());
        delta.set(1, 1, 0, Q.one());
        let a = h.algebra();
        let bad = HopfData::from_tensors(
            a.mu().clone(),
            a.unit().clone(),
            delta,
            h.coalgebra().counit().clone(),
            h.antipode().clone(),
        )
        .unwrap();
        // x ↦ x ⊗ 1 is still an algebra map
        assert!(check_bialgebra_compat(&bad).passed("bialg.delta_mult"));
        let r = check_unital_counital(&bad);
        assert!(!r.passed("counit.left"));
        assert_eq!(witness(&r, "counit.left"), vec![1]);
    }

    #[test]
    fn zero_antipode_fails_quasi_and_antipode_laws() {
        let h = group_algebra(&cyclic(2), Q);
        let bad = HopfQuasigroup::new(with_antipode(&h, Matrix::zeros(Q, 2, 2)));
        let r = check_quasi_identities(&bad);
        assert!(r.passed("coassoc"));
        for id in ["quasi1.left", "quasi1.right", "quasi2.left", "quasi2.right"] {
            assert!(!r.passed(id), "{id}");
            assert_eq!(r.entry(id).unwrap().failures, 4);
        }
        assert_eq!(witness(&r, "quasi1.left"), vec![0, 0]);
        let r = check_antipode_basic(&bad);
        assert_eq!(witness(&r, "antipode.left"), vec![0]);
    }

    #[test]
    fn identity_antipode_on_c3_fails_coq_at_generator() {
        let h = group_algebra(&cyclic(3), Q);
        let bad = HopfCoquasigroup::new(with_antipode(&h, Matrix::identity(Q, 3)));
        let r = check_coq_identities(&bad);
        assert!(r.passed("assoc"));
        assert_eq!(witness(&r, "coq1.left"), vec![1]);
    }

    #[test]
    fn dualize_is_an_involution() {
        let h = group_algebra(&s3(), Q);
        let back = dualize_coquasigroup(&dualize(&h));
        assert!(back.same_tensors(&h));
        assert!(!dualize(&h).same_tensors(&h));
    }

    #[test]
    fn nonassociative_loop_algebra_and_its_dual() {
        let h = group_algebra(&loop7(), Q);
        let r = hopf_quasigroup_suite(&h);
        assert!(r.all_pass());
        assert!(!r.entry("assoc").unwrap().pass);
        assert!(r.entry("assoc").unwrap().informational);
        assert!(check_antipode_basic(&h).all_pass());

        let d = dualize(&h);
        let r = check_coq_identities(&d);
        assert!(r.all_pass());
        assert!(!check_coassociativity(&d).all_pass());
        assert!(hopf_coquasigroup_suite(&d).all_pass());
    }

    #[test]
    fn witness_reproduces_discrepancy() {
        let h = group_algebra(&loop7(), Q);
        let law = assoc_law(&h);
        let entry = law.check();
        let w = entry.witness.unwrap();
        let (lhs, rhs) = law.evaluate(&w.index);
        assert_eq!((lhs, rhs), (w.lhs, w.rhs));
    }
}
