//! Modules, comodules, module algebras and bicomodule algebras over a Hopf
//! algebra, with the equivariant-Hom solver and the invariants functor.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldKind, Scalar};
use crate::hopf::HopfAlgebra;
use crate::matrix::{Matrix, SubspaceBasis};
use crate::report::ValidationReport;

/// A finite-dimensional left `H`-module: one action matrix per basis element
/// of `H`.
#[derive(Clone, Debug)]
pub struct HModule {
    hopf: Arc<HopfAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl HModule {
    pub fn new(hopf: Arc<HopfAlgebra>, action: Vec<Matrix>) -> Result<HModule> {
        if action.len() != hopf.dim() {
            return Err(Error::Structure(
                "need one action matrix per Hopf basis element".into(),
            ));
        }
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        for m in &action {
            if m.rows() != dim || m.cols() != dim || m.field() != hopf.field() {
                return Err(Error::Structure("action matrices must be square, same size, same field".into()));
            }
        }
        Ok(HModule { hopf, dim, action })
    }

    /// Trivial module: `h . v = eps(h) v`.
    pub fn trivial(hopf: &Arc<HopfAlgebra>, dim: usize) -> HModule {
        let action = (0..hopf.dim())
            .map(|i| Matrix::identity(hopf.field(), dim).scale(&hopf.counit_scalar(i)))
            .collect();
        HModule {
            hopf: Arc::clone(hopf),
            dim,
            action,
        }
    }

    /// One-dimensional module given by a character `chi: H -> k`
    /// (values on the basis). Validity is the caller's claim; check with
    /// [`HModule::validate`].
    pub fn character(hopf: &Arc<HopfAlgebra>, values: &[Scalar]) -> Result<HModule> {
        if values.len() != hopf.dim() {
            return Err(Error::Structure("character needs one value per basis element".into()));
        }
        let action = values
            .iter()
            .map(|v| {
                let mut m = Matrix::zero(hopf.field(), 1, 1);
                m.set(0, 0, v.clone());
                m
            })
            .collect();
        HModule::new(Arc::clone(hopf), action)
    }

    /// Left regular module `H` acting on itself.
    pub fn regular(hopf: &Arc<HopfAlgebra>) -> HModule {
        let action = (0..hopf.dim()).map(|i| hopf.left_mult(i)).collect();
        HModule {
            hopf: Arc::clone(hopf),
            dim: hopf.dim(),
            action,
        }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldKind {
        self.hopf.field()
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Action of an arbitrary element given as a `dim H x 1` vector.
    pub fn action_of(&self, v: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.field(), self.dim, self.dim);
        for (i, _, c) in v.entries() {
            out = out.add(&self.action[i].scale(c));
        }
        out
    }

    /// Module laws checked per basis pair (enough by bilinearity).
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("H-module");
        let h = &self.hopf;
        let unit_action = self.action_of(h.unit());
        rep.record(
            "unit acts by identity",
            unit_action == Matrix::identity(self.field(), self.dim),
        );
        let mut assoc = true;
        'outer: for i in 0..h.dim() {
            for j in 0..h.dim() {
                let mut lhs = Matrix::zero(self.field(), self.dim, self.dim);
                for (k, c) in h.mult().column(i * h.dim() + j) {
                    lhs = lhs.add(&self.action[k].scale(&c));
                }
                if lhs != self.action[i].mul(&self.action[j]) {
                    assoc = false;
                    break 'outer;
                }
            }
        }
        rep.record("action respects multiplication", assoc);
        rep
    }
}

/// Diagonal tensor product of modules: `h . (v (x) w) = h^1 v (x) h^2 w`.
pub fn tensor_modules(v: &HModule, w: &HModule) -> HModule {
    assert!(Arc::ptr_eq(&v.hopf, &w.hopf), "modules over different Hopf algebras");
    let h = &v.hopf;
    let dim = v.dim * w.dim;
    let action = (0..h.dim())
        .map(|i| {
            let mut m = Matrix::zero(v.field(), dim, dim);
            for (c, a, b) in h.sweedler_pairs(i) {
                m = m.add(&v.action[*a].kron(&w.action[*b]).scale(c));
            }
            m
        })
        .collect();
    HModule {
        hopf: Arc::clone(h),
        dim,
        action,
    }
}

/// Constraint matrix whose kernel is `Hom_H(V, W)`, on unknowns
/// `f[(w,v)] = f_{w,v}` flattened as `w * dim V + v`.
pub fn hom_constraint_matrix(v: &HModule, w: &HModule) -> Matrix {
    assert!(Arc::ptr_eq(&v.hopf, &w.hopf));
    let h = &v.hopf;
    let field = v.field();
    let unknowns = w.dim * v.dim;
    let mut c = Matrix::zero(field, h.dim() * w.dim * v.dim, unknowns);
    for hi in 0..h.dim() {
        let av = v.action(hi);
        let aw = w.action(hi);
        for wr in 0..w.dim {
            for vc in 0..v.dim {
                let row = (hi * w.dim + wr) * v.dim + vc;
                // (f o act_V(h))_{wr, vc} - (act_W(h) o f)_{wr, vc} = 0
                for (vp, s) in av.column(vc) {
                    c.add_to(row, wr * v.dim + vp, &s);
                }
                for (wp, s) in aw.row(wr) {
                    c.add_to(row, wp * v.dim + vc, &-s);
                }
            }
        }
    }
    c
}

/// Basis of the space of `H`-equivariant maps `V -> W`.
pub fn hom_h_basis(v: &HModule, w: &HModule) -> Vec<Matrix> {
    let c = hom_constraint_matrix(v, w);
    c.kernel_basis()
        .into_iter()
        .map(|col| {
            let mut m = Matrix::zero(v.field(), w.dim, v.dim);
            for (i, _, s) in col.entries() {
                m.set(i / v.dim, i % v.dim, s.clone());
            }
            m
        })
        .collect()
}

/// Basis of the invariants `V^H = { v : h v = eps(h) v }`.
pub fn invariants(v: &HModule) -> Vec<Matrix> {
    invariants_basis(v).basis_matrix().clone().into_columns()
}

/// Invariants as a subspace with fast coordinates.
pub fn invariants_basis(v: &HModule) -> SubspaceBasis {
    let h = &v.hopf;
    let mut c = Matrix::zero(v.field(), h.dim() * v.dim, v.dim);
    for hi in 0..h.dim() {
        let eps = h.counit_scalar(hi);
        for r in 0..v.dim {
            for vc in 0..v.dim {
                let mut s = v.action(hi).get(r, vc);
                if r == vc {
                    s = &s - &eps;
                }
                if !s.is_zero() {
                    c.set(hi * v.dim + r, vc, s);
                }
            }
        }
    }
    SubspaceBasis::kernel_of(&c)
}

impl Matrix {
    /// Split a matrix into its columns.
    pub fn into_columns(&self) -> Vec<Matrix> {
        (0..self.cols()).map(|c| self.column_vector(c)).collect()
    }
}

/// A right `H`-comodule: coaction `t -> t_0 (x) t_1` as a
/// `(dim V * dim H) x dim V` matrix with rows flattened `(v, h)`.
#[derive(Clone, Debug)]
pub struct HComodule {
    hopf: Arc<HopfAlgebra>,
    dim: usize,
    coaction: Matrix,
}

impl HComodule {
    pub fn new(hopf: Arc<HopfAlgebra>, dim: usize, coaction: Matrix) -> Result<HComodule> {
        if coaction.rows() != dim * hopf.dim() || coaction.cols() != dim {
            return Err(Error::Structure(format!(
                "coaction must be {}x{dim}",
                dim * hopf.dim()
            )));
        }
        Ok(HComodule { hopf, dim, coaction })
    }

    pub fn trivial(hopf: &Arc<HopfAlgebra>, dim: usize) -> HComodule {
        let mut co = Matrix::zero(hopf.field(), dim * hopf.dim(), dim);
        for v in 0..dim {
            for (hrow, c) in hopf.unit().column(0) {
                co.set(v * hopf.dim() + hrow, v, c);
            }
        }
        HComodule {
            hopf: Arc::clone(hopf),
            dim,
            coaction: co,
        }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    /// Sweedler pairs of the coaction of basis vector `t`: `(c, t0, t1)`.
    pub fn coaction_pairs(&self, t: usize) -> Vec<(Scalar, usize, usize)> {
        self.coaction
            .column(t)
            .into_iter()
            .map(|(row, c)| (c, row / self.hopf.dim(), row % self.hopf.dim()))
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("H-comodule");
        let h = &self.hopf;
        let idv = Matrix::identity(h.field(), self.dim);
        let idh = Matrix::identity(h.field(), h.dim());
        let lhs = self.coaction.kron(&idh).mul(&self.coaction);
        let rhs = idv.kron(h.comult()).mul(&self.coaction);
        rep.record("coaction coassociativity", lhs == rhs);
        let counit_side = idv.kron(h.counit()).mul(&self.coaction);
        rep.record("coaction counitality", counit_side == idv);
        rep
    }
}

/// A unital associative algebra in the category of `H`-modules:
/// `h . (a b) = (h^1 a)(h^2 b)` and `h . 1 = eps(h) 1`.
#[derive(Clone, Debug)]
pub struct HModuleAlgebra {
    module: HModule,
    /// `dim x dim^2`.
    mult: Matrix,
    /// `dim x 1`.
    unit: Matrix,
}

impl HModuleAlgebra {
    pub fn new(module: HModule, mult: Matrix, unit: Matrix) -> Result<HModuleAlgebra> {
        let d = module.dim();
        if mult.rows() != d || mult.cols() != d * d || unit.rows() != d || unit.cols() != 1 {
            return Err(Error::Structure("module algebra tensor shapes are wrong".into()));
        }
        Ok(HModuleAlgebra { module, mult, unit })
    }

    /// The ground field as the one-dimensional trivial module algebra.
    pub fn ground_field(hopf: &Arc<HopfAlgebra>) -> HModuleAlgebra {
        let module = HModule::trivial(hopf, 1);
        HModuleAlgebra {
            module,
            mult: Matrix::identity(hopf.field(), 1),
            unit: Matrix::identity(hopf.field(), 1),
        }
    }

    /// `H` acting on itself by the adjoint action `h . a = h^1 a S(h^2)`.
    pub fn adjoint_of_hopf(hopf: &Arc<HopfAlgebra>) -> HModuleAlgebra {
        let n = hopf.dim();
        let action = (0..n)
            .map(|i| {
                let mut m = Matrix::zero(hopf.field(), n, n);
                for (c, h1, h2) in hopf.sweedler_pairs(i) {
                    let l = hopf.left_mult(*h1);
                    // right multiplication by S(e_{h2})
                    let mut r = Matrix::zero(hopf.field(), n, n);
                    for (s_row, s_c) in hopf.antipode().column(*h2) {
                        r = r.add(&hopf.right_mult(s_row).scale(&s_c));
                    }
                    m = m.add(&l.mul(&r).scale(c));
                }
                m
            })
            .collect();
        let module = HModule {
            hopf: Arc::clone(hopf),
            dim: n,
            action,
        };
        HModuleAlgebra {
            module,
            mult: hopf.mult().clone(),
            unit: hopf.unit().clone(),
        }
    }

    /// The dual group algebra `k^G` with the translation action of `kG`:
    /// `g . d_x = d_{gx}`. `hopf` must be the group algebra of `table`.
    pub fn dual_group_translation(
        hopf: &Arc<HopfAlgebra>,
        table: &[Vec<usize>],
    ) -> Result<HModuleAlgebra> {
        let n = table.len();
        if hopf.dim() != n {
            return Err(Error::Structure("table size does not match the group algebra".into()));
        }
        let field = hopf.field();
        let one = Scalar::one(field);
        let action = (0..n)
            .map(|g| {
                let mut m = Matrix::zero(field, n, n);
                for x in 0..n {
                    m.set(table[g][x], x, one.clone());
                }
                m
            })
            .collect();
        let module = HModule::new(Arc::clone(hopf), action)?;
        let mut mult = Matrix::zero(field, n, n * n);
        for x in 0..n {
            mult.set(x, x * n + x, one.clone());
        }
        let mut unit = Matrix::zero(field, n, 1);
        for x in 0..n {
            unit.set(x, 0, one.clone());
        }
        HModuleAlgebra::new(module, mult, unit)
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        self.module.hopf()
    }

    pub fn module(&self) -> &HModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn field(&self) -> FieldKind {
        self.module.field()
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn action(&self, i: usize) -> &Matrix {
        self.module.action(i)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("H-module algebra");
        rep.absorb("module", self.module.validate());
        let d = self.module.dim();
        let id = Matrix::identity(self.field(), d);
        let assoc = self.mult.mul(&self.mult.kron(&id)) == self.mult.mul(&id.kron(&self.mult));
        rep.record("associativity", assoc);
        let unital = self.mult.mul(&self.unit.kron(&id)) == id
            && self.mult.mul(&id.kron(&self.unit)) == id;
        rep.record("unitality", unital);

        let h = self.hopf();
        let mut compat = true;
        let mut unit_compat = true;
        for i in 0..h.dim() {
            // h . (ab) = (h^1 a)(h^2 b)
            let lhs = self.action(i).mul(&self.mult);
            let mut rhs = Matrix::zero(self.field(), d, d * d);
            for (c, a, b) in h.sweedler_pairs(i) {
                rhs = rhs.add(&self.mult.mul(&self.action(*a).kron(self.action(*b))).scale(c));
            }
            if lhs != rhs {
                compat = false;
            }
            // h . 1 = eps(h) 1
            if self.action(i).mul(&self.unit) != self.unit.scale(&h.counit_scalar(i)) {
                unit_compat = false;
            }
        }
        rep.record("action is by algebra derivations of the coproduct type", compat);
        rep.record("action fixes the unit via the counit", unit_compat);
        rep
    }
}

/// An `H`-bicomodule algebra: an algebra with commuting left and right
/// coactions `Delta_l: a -> a_{-1} (x) a_0` and `Delta_r: a -> a_0 (x) a_1`,
/// both algebra maps.
#[derive(Clone, Debug)]
pub struct BicomoduleAlgebra {
    hopf: Arc<HopfAlgebra>,
    dim: usize,
    mult: Matrix,
    unit: Matrix,
    /// `(dim H * dim A) x dim A`, rows flattened `(h, a)`.
    coact_l: Matrix,
    /// `(dim A * dim H) x dim A`, rows flattened `(a, h)`.
    coact_r: Matrix,
}

impl BicomoduleAlgebra {
    pub fn new(
        hopf: Arc<HopfAlgebra>,
        dim: usize,
        mult: Matrix,
        unit: Matrix,
        coact_l: Matrix,
        coact_r: Matrix,
    ) -> Result<BicomoduleAlgebra> {
        let nh = hopf.dim();
        if mult.rows() != dim
            || mult.cols() != dim * dim
            || unit.rows() != dim
            || coact_l.rows() != nh * dim
            || coact_l.cols() != dim
            || coact_r.rows() != dim * nh
            || coact_r.cols() != dim
        {
            return Err(Error::Structure("bicomodule algebra tensor shapes are wrong".into()));
        }
        Ok(BicomoduleAlgebra {
            hopf,
            dim,
            mult,
            unit,
            coact_l,
            coact_r,
        })
    }

    /// `H` itself with both coactions given by the coproduct.
    pub fn from_hopf(hopf: &Arc<HopfAlgebra>) -> BicomoduleAlgebra {
        BicomoduleAlgebra {
            hopf: Arc::clone(hopf),
            dim: hopf.dim(),
            mult: hopf.mult().clone(),
            unit: hopf.unit().clone(),
            coact_l: hopf.comult().clone(),
            coact_r: hopf.comult().clone(),
        }
    }

    /// Any algebra with both coactions trivial: `a -> 1 (x) a` and
    /// `a -> a (x) 1`.
    pub fn trivial_coactions(
        hopf: &Arc<HopfAlgebra>,
        dim: usize,
        mult: Matrix,
        unit: Matrix,
    ) -> Result<BicomoduleAlgebra> {
        let ida = Matrix::identity(hopf.field(), dim);
        let coact_l = hopf.unit().kron(&ida);
        let coact_r = ida.kron(hopf.unit());
        BicomoduleAlgebra::new(Arc::clone(hopf), dim, mult, unit, coact_l, coact_r)
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldKind {
        self.hopf.field()
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn coact_l(&self) -> &Matrix {
        &self.coact_l
    }

    pub fn coact_r(&self) -> &Matrix {
        &self.coact_r
    }

    /// Sweedler pairs `(c, h, a0)` of `Delta_l(e_a) = a_{-1} (x) a_0`.
    pub fn coact_l_pairs(&self, a: usize) -> Vec<(Scalar, usize, usize)> {
        self.coact_l
            .column(a)
            .into_iter()
            .map(|(row, c)| (c, row / self.dim, row % self.dim))
            .collect()
    }

    /// Sweedler pairs `(c, a0, h)` of `Delta_r(e_a) = a_0 (x) a_1`.
    pub fn coact_r_pairs(&self, a: usize) -> Vec<(Scalar, usize, usize)> {
        self.coact_r
            .column(a)
            .into_iter()
            .map(|(row, c)| (c, row / self.hopf.dim(), row % self.hopf.dim()))
            .collect()
    }

    /// Triples `(c, a_{-1}, a_0, a_1)` of the combined coaction.
    pub fn coact_triples(&self, a: usize) -> Vec<(Scalar, usize, usize, usize)> {
        let mut out = Vec::new();
        for (c, h, a0) in self.coact_l_pairs(a) {
            for (c2, a00, h1) in self.coact_r_pairs(a0) {
                out.push((&c * &c2, h, a00, h1));
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("H-bicomodule algebra");
        let field = self.field();
        let ida = Matrix::identity(field, self.dim);
        let idh = Matrix::identity(field, self.hopf.dim());
        let h = &self.hopf;

        let assoc = self.mult.mul(&self.mult.kron(&ida)) == self.mult.mul(&ida.kron(&self.mult));
        let unital = self.mult.mul(&self.unit.kron(&ida)) == ida
            && self.mult.mul(&ida.kron(&self.unit)) == ida;
        rep.record("associativity", assoc);
        rep.record("unitality", unital);

        // Delta_r coassociativity and counitality.
        let r_coassoc =
            self.coact_r.kron(&idh).mul(&self.coact_r) == ida.kron(h.comult()).mul(&self.coact_r);
        let r_counit = ida.kron(h.counit()).mul(&self.coact_r) == ida;
        rep.record("right coaction coassociativity", r_coassoc);
        rep.record("right coaction counitality", r_counit);

        // Delta_l coassociativity and counitality.
        let l_coassoc =
            idh.kron(&self.coact_l).mul(&self.coact_l) == h.comult().kron(&ida).mul(&self.coact_l);
        let l_counit = h.counit().kron(&ida).mul(&self.coact_l) == ida;
        rep.record("left coaction coassociativity", l_coassoc);
        rep.record("left coaction counitality", l_counit);

        // The coactions commute: (id_H (x) Delta_r) Delta_l = (Delta_l (x) id_H) Delta_r.
        let commute = idh.kron(&self.coact_r).mul(&self.coact_l)
            == self.coact_l.kron(&idh).mul(&self.coact_r);
        rep.record("coactions commute", commute);

        // Both coactions are algebra maps.
        let swap_ah = swap_blocks(field, self.dim, self.hopf.dim());
        let swap_ha = swap_blocks(field, self.hopf.dim(), self.dim);
        // Delta_r(ab) = Delta_r(a) Delta_r(b) in A (x) H.
        let lhs_r = self.coact_r.mul(&self.mult);
        let rhs_r = self
            .mult
            .kron(h.mult())
            .mul(&ida.kron(&swap_ah).kron(&idh))
            .mul(&self.coact_r.kron(&self.coact_r));
        let unit_r = self.coact_r.mul(&self.unit) == self.unit.kron(h.unit());
        rep.record("right coaction is an algebra map", lhs_r == rhs_r && unit_r);

        let lhs_l = self.coact_l.mul(&self.mult);
        let rhs_l = h
            .mult()
            .kron(&self.mult)
            .mul(&idh.kron(&swap_ha).kron(&ida))
            .mul(&self.coact_l.kron(&self.coact_l));
        let unit_l = self.coact_l.mul(&self.unit) == h.unit().kron(&self.unit);
        rep.record("left coaction is an algebra map", lhs_l == rhs_l && unit_l);
        rep
    }
}

/// Permutation `X (x) Y -> Y (x) X` on flattened indices.
pub fn swap_blocks(field: FieldKind, dim_x: usize, dim_y: usize) -> Matrix {
    let n = dim_x * dim_y;
    let mut m = Matrix::zero(field, n, n);
    for x in 0..dim_x {
        for y in 0..dim_y {
            m.set(y * dim_x + x, x * dim_y + y, Scalar::one(field));
        }
    }
    m
}

/// Which side of the key isomorphism to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsoSide {
    /// `A (x) V ~= A (x) underline(V)` using `Delta_r`.
    Right,
    /// `V (x) A ~= underline(V) (x) A` using `Delta_l`.
    Left,
}

/// The pair of mutually inverse `A`-module isomorphisms that trivialize the
/// coaction on a tensor factor:
/// right side `phi(a (x) v) = a_0 (x) a_1 v`, `theta(a (x) v) = a_0 (x) S(a_1) v`;
/// left side `phi(v (x) a) = a_{-1} v (x) a_0`, `theta(v (x) a) = S^{-1}(a_{-1}) v (x) a_0`.
pub fn key_iso(a: &BicomoduleAlgebra, v: &HModule, side: IsoSide) -> (Matrix, Matrix) {
    assert!(Arc::ptr_eq(a.hopf(), v.hopf()));
    let field = a.field();
    let h = a.hopf();
    let (da, dv) = (a.dim(), v.dim());
    let dim = da * dv;
    let mut phi = Matrix::zero(field, dim, dim);
    let mut theta = Matrix::zero(field, dim, dim);
    match side {
        IsoSide::Right => {
            for ai in 0..da {
                for (c, a0, h1) in a.coact_r_pairs(ai) {
                    let act = v.action(h1);
                    let mut s_act = Matrix::zero(field, dv, dv);
                    for (hs, cs) in h.antipode().column(h1) {
                        s_act = s_act.add(&v.action(hs).scale(&cs));
                    }
                    for vi in 0..dv {
                        for (vp, w) in act.column(vi) {
                            phi.add_to(a0 * dv + vp, ai * dv + vi, &(&c * &w));
                        }
                        for (vp, w) in s_act.column(vi) {
                            theta.add_to(a0 * dv + vp, ai * dv + vi, &(&c * &w));
                        }
                    }
                }
            }
        }
        IsoSide::Left => {
            for ai in 0..da {
                for (c, hm1, a0) in a.coact_l_pairs(ai) {
                    let act = v.action(hm1);
                    let mut s_act = Matrix::zero(field, dv, dv);
                    for (hs, cs) in h.antipode_inv().column(hm1) {
                        s_act = s_act.add(&v.action(hs).scale(&cs));
                    }
                    for vi in 0..dv {
                        for (vp, w) in act.column(vi) {
                            phi.add_to(vp * da + a0, vi * da + ai, &(&c * &w));
                        }
                        for (vp, w) in s_act.column(vi) {
                            theta.add_to(vp * da + a0, vi * da + ai, &(&c * &w));
                        }
                    }
                }
            }
        }
    }
    (phi, theta)
}

/// `A`-linearity report for the key isomorphism, together with the inverse
/// laws. The source carries the plain action on the `A` factor, the target
/// the coaction-twisted one.
pub fn key_iso_report(a: &BicomoduleAlgebra, v: &HModule, side: IsoSide) -> ValidationReport {
    let (phi, theta) = key_iso(a, v, side);
    let field = a.field();
    let (da, dv) = (a.dim(), v.dim());
    let dim = da * dv;
    let id = Matrix::identity(field, dim);
    let mut rep = ValidationReport::new("key isomorphism");
    rep.record("phi . theta = id", phi.mul(&theta) == id);
    rep.record("theta . phi = id", theta.mul(&phi) == id);

    // Left multiplication of A on itself.
    let la: Vec<Matrix> = (0..da)
        .map(|x| {
            let mut m = Matrix::zero(field, da, da);
            for b in 0..da {
                for (k, c) in a.mult().column(x * da + b) {
                    m.add_to(k, b, &c);
                }
            }
            m
        })
        .collect();

    let mut linear = true;
    for x in 0..da {
        let (src, tgt): (Matrix, Matrix) = match side {
            IsoSide::Right => {
                // source x . (a (x) v) = xa (x) v ; target x . (a (x) v) = x_0 a (x) x_1 v
                let src = la[x].kron(&Matrix::identity(field, dv));
                let mut tgt = Matrix::zero(field, dim, dim);
                for (c, x0, x1) in a.coact_r_pairs(x) {
                    tgt = tgt.add(&la[x0].kron(v.action(x1)).scale(&c));
                }
                (src, tgt)
            }
            IsoSide::Left => {
                let src = Matrix::identity(field, dv).kron(&la[x]);
                let mut tgt = Matrix::zero(field, dim, dim);
                for (c, xm1, x0) in a.coact_l_pairs(x) {
                    tgt = tgt.add(&v.action(xm1).kron(&la[x0]).scale(&c));
                }
                (src, tgt)
            }
        };
        if phi.mul(&src) != tgt.mul(&phi) {
            linear = false;
        }
    }
    rep.record("phi is A-linear", linear);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_group_table, group_algebra, sweedler_algebra};

    fn z2() -> Arc<HopfAlgebra> {
        group_algebra(FieldKind::Q, &cyclic_group_table(2)).unwrap()
    }

    fn sign_module(h: &Arc<HopfAlgebra>) -> HModule {
        let one = Scalar::one(FieldKind::Q);
        HModule::character(h, &[one.clone(), -&one]).unwrap()
    }

    #[test]
    fn tensor_with_trivial_is_identity_on_actions() {
        let h = z2();
        let v = HModule::regular(&h);
        let t = tensor_modules(&v, &HModule::trivial(&h, 1));
        for i in 0..h.dim() {
            assert_eq!(t.action(i), v.action(i));
        }
        assert!(t.validate().passed());
    }

    #[test]
    fn sign_squared_is_trivial() {
        let h = z2();
        let s = sign_module(&h);
        let t = tensor_modules(&s, &s);
        for i in 0..h.dim() {
            assert_eq!(t.action(i), HModule::trivial(&h, 1).action(i));
        }
    }

    #[test]
    fn sweedler_tensor_of_modules_validates() {
        let h = sweedler_algebra(FieldKind::Q).unwrap();
        // 2-dimensional module: g = diag(1,-1), x maps v0 -> v1 -> 0.
        let one = Scalar::one(FieldKind::Q);
        let mut g = Matrix::zero(FieldKind::Q, 2, 2);
        g.set(0, 0, one.clone());
        g.set(1, 1, -&one);
        let mut x = Matrix::zero(FieldKind::Q, 2, 2);
        x.set(1, 0, one.clone());
        let gx = g.mul(&x);
        let m = HModule::new(
            Arc::clone(&h),
            vec![Matrix::identity(FieldKind::Q, 2), g, x, gx],
        )
        .unwrap();
        assert!(m.validate().passed());
        let t = tensor_modules(&m, &m);
        assert!(t.validate().passed());
    }

    #[test]
    fn hom_dimensions_over_z2() {
        let h = z2();
        let k = HModule::trivial(&h, 1);
        let s = sign_module(&h);
        let reg = HModule::regular(&h);
        assert_eq!(hom_h_basis(&k, &k).len(), 1);
        assert_eq!(hom_h_basis(&s, &k).len(), 0);
        assert_eq!(hom_h_basis(&reg, &k).len(), 1);
        // Internal consistency with the constraint-count oracle.
        assert_eq!(
            hom_constraint_matrix(&reg, &k).solve_dim_hom(),
            hom_h_basis(&reg, &k).len()
        );
    }

    #[test]
    fn invariants_over_z2() {
        let h = z2();
        assert_eq!(invariants(&HModule::trivial(&h, 1)).len(), 1);
        assert_eq!(invariants(&sign_module(&h)).len(), 0);
        let reg_inv = invariants(&HModule::regular(&h));
        assert_eq!(reg_inv.len(), 1);
        // spanned by 1 + g
        let v = &reg_inv[0];
        assert_eq!(v.get(0, 0), v.get(1, 0));
    }

    #[test]
    fn key_iso_trivial_coaction_is_identity() {
        let h = z2();
        let alg = BicomoduleAlgebra::trivial_coactions(
            &h,
            1,
            Matrix::identity(FieldKind::Q, 1),
            Matrix::identity(FieldKind::Q, 1),
        )
        .unwrap();
        assert!(alg.validate().passed());
        let v = HModule::regular(&h);
        let (phi, theta) = key_iso(&alg, &v, IsoSide::Right);
        assert_eq!(phi, Matrix::identity(FieldKind::Q, 2));
        assert_eq!(theta, Matrix::identity(FieldKind::Q, 2));
    }

    #[test]
    fn key_iso_z2_regular_is_an_inverse_pair() {
        let h = z2();
        let alg = BicomoduleAlgebra::from_hopf(&h);
        assert!(alg.validate().passed());
        let v = HModule::regular(&h);
        for side in [IsoSide::Right, IsoSide::Left] {
            let rep = key_iso_report(&alg, &v, side);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn key_iso_sweedler_a_linearity() {
        let h = sweedler_algebra(FieldKind::Q).unwrap();
        let alg = BicomoduleAlgebra::from_hopf(&h);
        assert!(alg.validate().passed());
        let one = Scalar::one(FieldKind::Q);
        let mut g = Matrix::zero(FieldKind::Q, 2, 2);
        g.set(0, 0, one.clone());
        g.set(1, 1, -&one);
        let mut x = Matrix::zero(FieldKind::Q, 2, 2);
        x.set(1, 0, one.clone());
        let gx = g.mul(&x);
        let v = HModule::new(
            Arc::clone(&h),
            vec![Matrix::identity(FieldKind::Q, 2), g, x, gx],
        )
        .unwrap();
        for side in [IsoSide::Right, IsoSide::Left] {
            let rep = key_iso_report(&alg, &v, side);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn module_algebra_validators() {
        let h = z2();
        assert!(HModuleAlgebra::ground_field(&h).validate().passed());
        assert!(HModuleAlgebra::adjoint_of_hopf(&h).validate().passed());
        let sw = sweedler_algebra(FieldKind::Q).unwrap();
        let adj = HModuleAlgebra::adjoint_of_hopf(&sw);
        assert!(adj.validate().passed());
    }
}
