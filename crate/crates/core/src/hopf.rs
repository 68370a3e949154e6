//! Finite-dimensional Hopf algebras as explicit structure tensors.
//!
//! A Hopf algebra is stored as five matrices over the ground field: the
//! multiplication `H (x) H -> H`, unit `k -> H`, comultiplication
//! `H -> H (x) H`, counit `H -> k` and the antipode with its inverse. Every
//! axiom is then a finite matrix identity, checked with exactly-zero
//! residuals by [`HopfAlgebra::validate`]. Tensor-square indices are flat:
//! `(i, j) -> i * dim + j`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldKind, Scalar};
use crate::matrix::Matrix;
use crate::report::ValidationReport;

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: FieldKind,
    dim: usize,
    basis: Vec<String>,
    /// `dim x dim^2`; column `(i,j)` holds the coefficients of `e_i e_j`.
    mult: Matrix,
    /// `dim x 1`.
    unit: Matrix,
    /// `dim^2 x dim`; column `i` holds `Delta(e_i)` on rows `(j,k)`.
    comult: Matrix,
    /// `1 x dim`.
    counit: Matrix,
    antipode: Matrix,
    antipode_inv: Matrix,
    /// Sweedler pairs of `Delta(e_i)`: `(coefficient, leg1, leg2)`.
    sweedler2: Vec<Vec<(Scalar, usize, usize)>>,
    /// Sweedler triples of `(Delta (x) id) Delta(e_i)`, cached because the
    /// anti-Yetter-Drinfeld formulas reuse them heavily.
    sweedler3: Vec<Vec<(Scalar, usize, usize, usize)>>,
}

impl HopfAlgebra {
    /// Assemble from structure tensors. Checks shapes (structural errors come
    /// before any axiom checking) and computes `S^{-1}` when not supplied.
    /// Axioms are *not* checked here; call [`HopfAlgebra::validate`].
    pub fn new(
        field: FieldKind,
        basis: Vec<String>,
        mult: Matrix,
        unit: Matrix,
        comult: Matrix,
        counit: Matrix,
        antipode: Matrix,
        antipode_inv: Option<Matrix>,
    ) -> Result<Arc<HopfAlgebra>> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::Structure("Hopf algebra of dimension 0".into()));
        }
        let shapes: [(&Matrix, usize, usize, &str); 5] = [
            (&mult, dim, dim * dim, "mult"),
            (&unit, dim, 1, "unit"),
            (&comult, dim * dim, dim, "comult"),
            (&counit, 1, dim, "counit"),
            (&antipode, dim, dim, "antipode"),
        ];
        for (m, r, c, name) in shapes {
            if m.rows() != r || m.cols() != c {
                return Err(Error::Structure(format!(
                    "{name} tensor must be {r}x{c}, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::Structure(format!("{name} tensor over wrong field")));
            }
        }
        let antipode_inv = match antipode_inv {
            Some(s) => {
                if s.rows() != dim || s.cols() != dim {
                    return Err(Error::Structure("antipode_inv has wrong shape".into()));
                }
                s
            }
            None => antipode.inverse().map_err(|_| {
                Error::Structure("antipode is singular and no inverse was supplied".into())
            })?,
        };
        let sweedler2: Vec<Vec<(Scalar, usize, usize)>> = (0..dim)
            .map(|i| {
                comult
                    .column(i)
                    .into_iter()
                    .map(|(rc, v)| (v, rc / dim, rc % dim))
                    .collect()
            })
            .collect();
        let sweedler3 = (0..dim)
            .map(|i| {
                let mut triples = Vec::new();
                for (c, l1, l2) in &sweedler2[i] {
                    for (c2, a, b) in &sweedler2[*l1] {
                        triples.push((c * c2, *a, *b, *l2));
                    }
                }
                triples
            })
            .collect();
        Ok(Arc::new(HopfAlgebra {
            field,
            dim,
            basis,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inv,
            sweedler2,
            sweedler3,
        }))
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    /// Sweedler pairs of `Delta(e_i)`.
    pub fn sweedler_pairs(&self, i: usize) -> &[(Scalar, usize, usize)] {
        &self.sweedler2[i]
    }

    /// Sweedler triples of `Delta^2(e_i)`: `(c, h1, h2, h3)`.
    pub fn sweedler_triples(&self, i: usize) -> &[(Scalar, usize, usize, usize)] {
        &self.sweedler3[i]
    }

    pub fn counit_scalar(&self, i: usize) -> Scalar {
        self.counit.get(0, i)
    }

    /// Product of two sparse elements, as a `dim x 1` vector.
    pub fn mul_vec(&self, u: &Matrix, v: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.field, self.dim, 1);
        for (i, _, a) in u.entries() {
            for (j, _, b) in v.entries() {
                let coeff = a * b;
                for (k, w) in self.mult.column(i * self.dim + j) {
                    out.add_to(k, 0, &(&coeff * &w));
                }
            }
        }
        out
    }

    pub fn basis_vec(&self, i: usize) -> Matrix {
        let mut v = Matrix::zero(self.field, self.dim, 1);
        v.set(i, 0, Scalar::one(self.field));
        v
    }

    /// Left multiplication operator by basis element `e_i`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            for (k, v) in self.mult.column(i * self.dim + j) {
                m.add_to(k, j, &v);
            }
        }
        m
    }

    /// Right multiplication operator by basis element `e_j`.
    pub fn right_mult(&self, j: usize) -> Matrix {
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for (k, v) in self.mult.column(i * self.dim + j) {
                m.add_to(k, i, &v);
            }
        }
        m
    }

    /// Full axiom suite. Residuals are matrices and pass iff exactly zero.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("hopf algebra");
        let n = self.dim;
        let id = Matrix::identity(self.field, n);

        let assoc_l = self.mult.mul(&self.mult.kron(&id));
        let assoc_r = self.mult.mul(&id.kron(&self.mult));
        rep.record("mult associativity", assoc_l == assoc_r);

        let unit_l = self.mult.mul(&self.unit.kron(&id));
        let unit_r = self.mult.mul(&id.kron(&self.unit));
        rep.record("mult unitality", unit_l == id && unit_r == id);

        let coassoc_l = self.comult.kron(&id).mul(&self.comult);
        let coassoc_r = id.kron(&self.comult).mul(&self.comult);
        rep.record("comult coassociativity", coassoc_l == coassoc_r);

        let counit_l = self.counit.kron(&id).mul(&self.comult);
        let counit_r = id.kron(&self.counit).mul(&self.comult);
        rep.record("comult counitality", counit_l == id && counit_r == id);

        // Delta and epsilon are algebra maps (bialgebra axioms).
        let swap23 = middle_swap(self.field, n);
        let delta_mult = self.comult.mul(&self.mult);
        let mult_delta = self
            .mult
            .kron(&self.mult)
            .mul(&swap23)
            .mul(&self.comult.kron(&self.comult));
        let delta_unit = self.comult.mul(&self.unit) == self.unit.kron(&self.unit);
        rep.record(
            "comult is an algebra map",
            delta_mult == mult_delta && delta_unit,
        );

        let eps_mult = self.counit.mul(&self.mult) == self.counit.kron(&self.counit);
        let eps_unit = self.counit.mul(&self.unit).get(0, 0).is_one();
        rep.record("counit is an algebra map", eps_mult && eps_unit);

        let eta_eps = self.unit.mul(&self.counit);
        let anti_l = self.mult.mul(&self.antipode.kron(&id)).mul(&self.comult);
        let anti_r = self.mult.mul(&id.kron(&self.antipode)).mul(&self.comult);
        rep.record("antipode axiom", anti_l == eta_eps && anti_r == eta_eps);

        let inv_ok = self.antipode.mul(&self.antipode_inv) == id
            && self.antipode_inv.mul(&self.antipode) == id;
        rep.record("antipode invertibility", inv_ok);
        rep
    }

    /// Crossed product `A >< H` on `A (x) H` with product
    /// `(a (x) x)(b (x) y) = a (x^1 b) (x) x^2 y` and unit `1 (x) 1`.
    pub fn crossed_product(self: &Arc<Self>, a: &crate::rep::HModuleAlgebra) -> Result<PlainAlgebra> {
        if !Arc::ptr_eq(a.hopf(), self) {
            return Err(Error::Structure(
                "module algebra is not over this Hopf algebra".into(),
            ));
        }
        let na = a.dim();
        let nh = self.dim;
        let dim = na * nh;
        let mut mult = Matrix::zero(self.field, dim, dim * dim);
        for ai in 0..na {
            for x in 0..nh {
                for bi in 0..na {
                    for y in 0..nh {
                        let col = (ai * nh + x) * dim + (bi * nh + y);
                        for (c, x1, x2) in self.sweedler_pairs(x) {
                            // x1 . b
                            for (b2, w) in a.action(*x1).column(bi) {
                                // a (x1 b)
                                for (a2, u) in a.mult().column(ai * na + b2) {
                                    // x2 y
                                    for (h2, z) in self.mult.column(x2 * nh + y) {
                                        let coeff = &(&(c * &w) * &u) * &z;
                                        mult.add_to(a2 * nh + h2, col, &coeff);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let unit = a.unit().kron(&self.unit);
        Ok(PlainAlgebra {
            field: self.field,
            dim,
            mult,
            unit,
        })
    }
}

/// Permutation of `H^{(x)4}` swapping the two middle tensor slots.
fn middle_swap(field: FieldKind, n: usize) -> Matrix {
    let n4 = n * n * n * n;
    let mut m = Matrix::zero(field, n4, n4);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let src = ((a * n + b) * n + c) * n + d;
                    let dst = ((a * n + c) * n + b) * n + d;
                    m.set(dst, src, Scalar::one(field));
                }
            }
        }
    }
    m
}

/// An associative unital algebra with no Hopf structure; the crossed product
/// lands here.
#[derive(Clone, Debug)]
pub struct PlainAlgebra {
    pub field: FieldKind,
    pub dim: usize,
    /// `dim x dim^2`.
    pub mult: Matrix,
    /// `dim x 1`.
    pub unit: Matrix,
}

impl PlainAlgebra {
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("algebra");
        let id = Matrix::identity(self.field, self.dim);
        let assoc = self.mult.mul(&self.mult.kron(&id)) == self.mult.mul(&id.kron(&self.mult));
        rep.record("associativity", assoc);
        let unit_ok = self.mult.mul(&self.unit.kron(&id)) == id
            && self.mult.mul(&id.kron(&self.unit)) == id;
        rep.record("unitality", unit_ok);
        rep
    }
}

/// A map of Hopf algebras `rho: K -> H`, stored as a `dim H x dim K` matrix.
#[derive(Clone, Debug)]
pub struct HopfMap {
    pub source: Arc<HopfAlgebra>,
    pub target: Arc<HopfAlgebra>,
    pub matrix: Matrix,
}

impl HopfMap {
    pub fn new(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, matrix: Matrix) -> Result<HopfMap> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Structure(format!(
                "Hopf map matrix must be {}x{}",
                target.dim(),
                source.dim()
            )));
        }
        if source.field() != target.field() {
            return Err(Error::Structure("Hopf map between different fields".into()));
        }
        Ok(HopfMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(h: &Arc<HopfAlgebra>) -> HopfMap {
        HopfMap {
            source: Arc::clone(h),
            target: Arc::clone(h),
            matrix: Matrix::identity(h.field(), h.dim()),
        }
    }

    /// The unit inclusion of the ground field, `k -> H`.
    pub fn unit_inclusion(h: &Arc<HopfAlgebra>) -> Result<HopfMap> {
        let k = ground_field_hopf(h.field())?;
        HopfMap::new(k, Arc::clone(h), h.unit().clone())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("hopf map");
        let k = &self.source;
        let h = &self.target;
        let rho = &self.matrix;
        let rho2 = rho.kron(rho);
        rep.record(
            "algebra map",
            rho.mul(k.mult()) == h.mult().mul(&rho2) && rho.mul(k.unit()) == *h.unit(),
        );
        rep.record(
            "coalgebra map",
            h.comult().mul(rho) == rho2.mul(k.comult())
                && h.counit().mul(rho) == *k.counit(),
        );
        rep.record(
            "commutes with antipode",
            rho.mul(k.antipode()) == h.antipode().mul(rho),
        );
        rep
    }
}

/// The ground field as a one-dimensional Hopf algebra.
pub fn ground_field_hopf(field: FieldKind) -> Result<Arc<HopfAlgebra>> {
    let one = Matrix::identity(field, 1);
    HopfAlgebra::new(
        field,
        vec!["1".into()],
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one,
        None,
    )
}

/// Multiplication table of the cyclic group `Z/n`: `table[i][j] = (i+j) mod n`.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Multiplication table of the symmetric group S3. Elements are indexed as
/// `e, r, r^2, s, sr, sr^2` with `r^3 = s^2 = e` and `rs = sr^2`.
pub fn s3_table() -> Vec<Vec<usize>> {
    // Represent i as (a, b) with element s^a r^b, a in {0,1}, b in {0,1,2};
    // index = 3a + b. Multiplication: (s^a r^b)(s^c r^d) =
    // s^{a+c} r^{(-1)^c b + d}.
    let idx = |a: usize, b: usize| 3 * a + b;
    let mut table = vec![vec![0usize; 6]; 6];
    for a in 0..2 {
        for b in 0..3 {
            for c in 0..2 {
                for d in 0..3 {
                    let e1 = (a + c) % 2;
                    let signed_b = if c == 1 { (3 - b) % 3 } else { b };
                    let e2 = (signed_b + d) % 3;
                    table[idx(a, b)][idx(c, d)] = idx(e1, e2);
                }
            }
        }
    }
    table
}

fn check_group_table(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Structure("empty group table".into()));
    }
    for row in table {
        if row.len() != n || row.iter().any(|&x| x >= n) {
            return Err(Error::Structure("malformed group table".into()));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::Structure("table is not associative".into()));
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j)) else {
        return Err(Error::Structure("table has no identity".into()));
    };
    let mut inverse = vec![usize::MAX; n];
    for a in 0..n {
        let Some(b) = (0..n).find(|&b| table[a][b] == e && table[b][a] == e) else {
            return Err(Error::Structure(format!("element {a} has no inverse")));
        };
        inverse[a] = b;
    }
    Ok((e, inverse))
}

/// Group algebra `kG`: basis `G`, `Delta(g) = g (x) g`, `eps(g) = 1`,
/// `S(g) = g^{-1}`.
pub fn group_algebra(field: FieldKind, table: &[Vec<usize>]) -> Result<Arc<HopfAlgebra>> {
    let (e, inverse) = check_group_table(table)?;
    let n = table.len();
    let one = Scalar::one(field);
    let mut mult = Matrix::zero(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            mult.set(table[i][j], i * n + j, one.clone());
        }
    }
    let mut unit = Matrix::zero(field, n, 1);
    unit.set(e, 0, one.clone());
    let mut comult = Matrix::zero(field, n * n, n);
    let mut counit = Matrix::zero(field, 1, n);
    let mut antipode = Matrix::zero(field, n, n);
    for g in 0..n {
        comult.set(g * n + g, g, one.clone());
        counit.set(0, g, one.clone());
        antipode.set(inverse[g], g, one.clone());
    }
    let basis = (0..n).map(|g| format!("g{g}")).collect();
    HopfAlgebra::new(field, basis, mult, unit, comult, counit, antipode, None)
}

/// Dual group algebra `k^G`: basis of idempotents `d_g`, pointwise product,
/// `Delta(d_g) = sum_{ab=g} d_a (x) d_b`, `eps(d_g) = [g = e]`, `S(d_g) = d_{g^{-1}}`.
pub fn dual_group_algebra(field: FieldKind, table: &[Vec<usize>]) -> Result<Arc<HopfAlgebra>> {
    let (e, inverse) = check_group_table(table)?;
    let n = table.len();
    let one = Scalar::one(field);
    let mut mult = Matrix::zero(field, n, n * n);
    for g in 0..n {
        mult.set(g, g * n + g, one.clone());
    }
    let mut unit = Matrix::zero(field, n, 1);
    for g in 0..n {
        unit.set(g, 0, one.clone());
    }
    let mut comult = Matrix::zero(field, n * n, n);
    for a in 0..n {
        for b in 0..n {
            comult.set(a * n + b, table[a][b], one.clone());
        }
    }
    let mut counit = Matrix::zero(field, 1, n);
    counit.set(0, e, one.clone());
    let mut antipode = Matrix::zero(field, n, n);
    for g in 0..n {
        antipode.set(inverse[g], g, one.clone());
    }
    let basis = (0..n).map(|g| format!("d{g}")).collect();
    HopfAlgebra::new(field, basis, mult, unit, comult, counit, antipode, None)
}

/// Taft-type algebra on generators `g, x` with `g^n = 1`, `x^n = 0`,
/// `x g = q g x`, `Delta(g) = g (x) g`, `Delta(x) = x (x) 1 + g (x) x`.
/// Requires `q` to be a primitive `n`-th root of unity. The coproduct and
/// antipode are extended multiplicatively, so the bialgebra axioms hold by
/// construction and are re-checked by the validator.
pub fn taft_algebra(field: FieldKind, n: usize, q: Scalar) -> Result<Arc<HopfAlgebra>> {
    if n < 2 {
        return Err(Error::Structure("Taft parameter n must be >= 2".into()));
    }
    if q.kind() != field {
        return Err(Error::Structure("root of unity from wrong field".into()));
    }
    // Primitivity: q^n = 1 and q^j != 1 for 0 < j < n.
    let mut pow = Scalar::one(field);
    for j in 1..=n {
        pow = &pow * &q;
        if j < n && pow.is_one() {
            return Err(Error::Structure(format!(
                "q is not a primitive {n}-th root of unity (q^{j} = 1)"
            )));
        }
    }
    if !pow.is_one() {
        return Err(Error::Structure(format!(
            "q is not a primitive {n}-th root of unity (q^{n} != 1)"
        )));
    }

    let dim = n * n;
    // Basis g^i x^j at index j*n + i, so the first elements read 1, g, g^2, ...
    let idx = |i: usize, j: usize| j * n + i;
    let one = Scalar::one(field);

    // q powers table.
    let mut qp = vec![Scalar::one(field)];
    for _ in 1..=(n * n) {
        qp.push(&qp[qp.len() - 1] * &q);
    }

    // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}, zero when j+l >= n.
    let mut mult = Matrix::zero(field, dim, dim * dim);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j + l >= n {
                        continue;
                    }
                    let col = idx(i, j) * dim + idx(k, l);
                    mult.set(idx((i + k) % n, j + l), col, qp[j * k].clone());
                }
            }
        }
    }
    let mut unit = Matrix::zero(field, dim, 1);
    unit.set(idx(0, 0), 0, one.clone());

    // Extend Delta multiplicatively from the generators inside H (x) H.
    let tensor_mul = |u: &Matrix, v: &Matrix| -> Matrix {
        // Product in H (x) H given columns of coefficients on (a,b) indices.
        let mut out = Matrix::zero(field, dim * dim, 1);
        for (rc_u, _, cu) in u.entries() {
            let (a1, b1) = (rc_u / dim, rc_u % dim);
            for (rc_v, _, cv) in v.entries() {
                let (a2, b2) = (rc_v / dim, rc_v % dim);
                let coeff = cu * cv;
                for (a, va) in mult.column(a1 * dim + a2) {
                    for (b, vb) in mult.column(b1 * dim + b2) {
                        out.add_to(a * dim + b, 0, &(&(&coeff * &va) * &vb));
                    }
                }
            }
        }
        out
    };
    let mut delta_g = Matrix::zero(field, dim * dim, 1);
    delta_g.set(idx(1, 0) * dim + idx(1, 0), 0, one.clone());
    let mut delta_x = Matrix::zero(field, dim * dim, 1);
    delta_x.set(idx(0, 1) * dim + idx(0, 0), 0, one.clone());
    delta_x.set(idx(1, 0) * dim + idx(0, 1), 0, one.clone());

    let mut comult = Matrix::zero(field, dim * dim, dim);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Matrix::zero(field, dim * dim, 1);
            acc.set(idx(0, 0) * dim + idx(0, 0), 0, one.clone());
            for _ in 0..i {
                acc = tensor_mul(&acc, &delta_g);
            }
            for _ in 0..j {
                acc = tensor_mul(&acc, &delta_x);
            }
            for (r, _, v) in acc.entries() {
                comult.set(r, idx(i, j), v.clone());
            }
        }
    }

    let mut counit = Matrix::zero(field, 1, dim);
    for i in 0..n {
        counit.set(0, idx(i, 0), one.clone());
    }

    // S(g) = g^{n-1}, S(x) = -g^{n-1} x, extended as an anti-algebra map:
    // S(g^i x^j) = S(x)^j S(g)^i.
    let mul_elem = |u: &Matrix, v: &Matrix| -> Matrix {
        let mut out = Matrix::zero(field, dim, 1);
        for (a, _, cu) in u.entries() {
            for (b, _, cv) in v.entries() {
                for (k, w) in mult.column(a * dim + b) {
                    out.add_to(k, 0, &(&(cu * cv) * &w));
                }
            }
        }
        out
    };
    let mut s_g = Matrix::zero(field, dim, 1);
    s_g.set(idx(n - 1, 0), 0, one.clone());
    let mut s_x = Matrix::zero(field, dim, 1);
    s_x.set(idx(n - 1, 1), 0, -&one);
    let mut antipode = Matrix::zero(field, dim, dim);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Matrix::zero(field, dim, 1);
            acc.set(idx(0, 0), 0, one.clone());
            for _ in 0..j {
                acc = mul_elem(&acc, &s_x);
            }
            for _ in 0..i {
                acc = mul_elem(&acc, &s_g);
            }
            for (r, _, v) in acc.entries() {
                antipode.set(r, idx(i, j), v.clone());
            }
        }
    }

    let basis = (0..dim)
        .map(|t| {
            let (j, i) = (t / n, t % n);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (1, 0) => "g".to_string(),
                (0, 1) => "x".to_string(),
                (1, 1) => "gx".to_string(),
                (i, 0) => format!("g^{i}"),
                (0, j) => format!("x^{j}"),
                (1, j) => format!("g x^{j}"),
                (i, 1) => format!("g^{i} x"),
                (i, j) => format!("g^{i} x^{j}"),
            }
        })
        .collect();
    HopfAlgebra::new(field, basis, mult, unit, comult, counit, antipode, None)
}

/// Sweedler's 4-dimensional Hopf algebra: the Taft algebra at `n = 2`,
/// `q = -1`. The smallest example with `S^2 != id`. Rejects characteristic 2.
pub fn sweedler_algebra(field: FieldKind) -> Result<Arc<HopfAlgebra>> {
    if field.characteristic() == 2 {
        return Err(Error::Structure(
            "Sweedler algebra needs characteristic != 2".into(),
        ));
    }
    taft_algebra(field, 2, -&Scalar::one(field))
}

/// Taft algebra over `F_p` with `n | p - 1` and `q` a primitive `n`-th root.
pub fn taft_algebra_fp(n: usize, p: u64, q: i64) -> Result<Arc<HopfAlgebra>> {
    let field = FieldKind::prime_field(p)?;
    taft_algebra(field, n, Scalar::from_int(field, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::HModuleAlgebra;

    #[test]
    fn ground_field_passes() {
        let h = ground_field_hopf(FieldKind::Q).unwrap();
        assert!(h.validate().passed());
    }

    #[test]
    fn group_algebra_z2_passes_and_s_is_identity() {
        let h = group_algebra(FieldKind::Q, &cyclic_group_table(2)).unwrap();
        let rep = h.validate();
        assert!(rep.passed(), "{rep}");
        assert_eq!(*h.antipode(), Matrix::identity(FieldKind::Q, 2));
    }

    #[test]
    fn trivial_group_gives_dimension_one() {
        let h = group_algebra(FieldKind::Q, &cyclic_group_table(1)).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.validate().passed());
    }

    #[test]
    fn s3_group_algebra_passes() {
        let h = group_algebra(FieldKind::Q, &s3_table()).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(h.validate().passed());
    }

    #[test]
    fn non_group_table_rejected() {
        // Not associative / no identity.
        let table = vec![vec![1, 1], vec![1, 1]];
        assert!(group_algebra(FieldKind::Q, &table).is_err());
    }

    #[test]
    fn dual_group_algebra_z2_comult() {
        let h = dual_group_algebra(FieldKind::Q, &cyclic_group_table(2)).unwrap();
        assert!(h.validate().passed());
        // Delta(d_e) = d_e (x) d_e + d_g (x) d_g  (convolution identity).
        let pairs = h.sweedler_pairs(0);
        assert_eq!(pairs.len(), 2);
        assert!(pairs.iter().any(|(c, a, b)| c.is_one() && *a == 0 && *b == 0));
        assert!(pairs.iter().any(|(c, a, b)| c.is_one() && *a == 1 && *b == 1));
    }

    #[test]
    fn dual_group_algebra_z3_over_f7() {
        let field = FieldKind::prime_field(7).unwrap();
        let h = dual_group_algebra(field, &cyclic_group_table(3)).unwrap();
        assert!(h.validate().passed());
    }

    #[test]
    fn sweedler_validates_with_s_squared_nontrivial() {
        let h = sweedler_algebra(FieldKind::Q).unwrap();
        let rep = h.validate();
        assert!(rep.passed(), "{rep}");
        let s2 = h.antipode().mul(h.antipode());
        assert_ne!(s2, Matrix::identity(FieldKind::Q, 4));
        assert_eq!(
            h.antipode().mul(h.antipode_inv()),
            Matrix::identity(FieldKind::Q, 4)
        );
        // eps(x) = 0 for the skew-primitive generator.
        assert!(h.counit_scalar(2).is_zero());
        assert!(sweedler_algebra(FieldKind::prime_field(2).unwrap()).is_err());
    }

    #[test]
    fn mutated_sweedler_fails_exactly_the_antipode_axiom() {
        let h = sweedler_algebra(FieldKind::Q).unwrap();
        // Mutate S(x) from -gx to gx and recompute the matrix inverse so that
        // invertibility still holds.
        let mut s = h.antipode().clone();
        s.set(3, 2, Scalar::one(FieldKind::Q));
        let s_inv = s.inverse().unwrap();
        let mutant = HopfAlgebra::new(
            FieldKind::Q,
            h.basis_labels().to_vec(),
            h.mult().clone(),
            h.unit().clone(),
            h.comult().clone(),
            h.counit().clone(),
            s,
            Some(s_inv),
        )
        .unwrap();
        let rep = mutant.validate();
        assert!(!rep.passed());
        assert_eq!(rep.failing_laws(), vec!["antipode axiom"]);
    }

    #[test]
    fn taft_n2_over_f3_matches_sweedler() {
        let f3 = FieldKind::prime_field(3).unwrap();
        let taft = taft_algebra_fp(2, 3, 2).unwrap();
        let sw = sweedler_algebra(f3).unwrap();
        assert_eq!(taft.mult(), sw.mult());
        assert_eq!(taft.comult(), sw.comult());
        assert_eq!(taft.antipode(), sw.antipode());
    }

    #[test]
    fn taft_n3_over_f7_passes() {
        let h = taft_algebra_fp(3, 7, 2).unwrap();
        assert_eq!(h.dim(), 9);
        let rep = h.validate();
        assert!(rep.passed(), "{rep}");
        // S has order 2n = 6 here, in particular S^2 != id.
        let s2 = h.antipode().mul(h.antipode());
        assert_ne!(s2, Matrix::identity(h.field(), 9));
    }

    #[test]
    fn taft_rejects_non_primitive_root() {
        assert!(taft_algebra_fp(2, 3, 1).is_err());
        // q = 6 has order 2 mod 7, not 3.
        assert!(taft_algebra_fp(3, 7, 6).is_err());
    }

    #[test]
    fn hopf_map_identity_and_unit_inclusion_validate() {
        let h = group_algebra(FieldKind::Q, &cyclic_group_table(2)).unwrap();
        assert!(HopfMap::identity(&h).validate().passed());
        assert!(HopfMap::unit_inclusion(&h).unwrap().validate().passed());
    }

    #[test]
    fn crossed_product_with_ground_field_recovers_h() {
        let h = group_algebra(FieldKind::Q, &cyclic_group_table(2)).unwrap();
        let a = HModuleAlgebra::ground_field(&h);
        let cp = h.crossed_product(&a).unwrap();
        assert!(cp.validate().passed());
        // A = k makes the twist vanish: the product tensor is H's.
        assert_eq!(cp.mult, *h.mult());
    }

    #[test]
    fn crossed_product_translation_algebra_is_associative() {
        let h = group_algebra(FieldKind::Q, &cyclic_group_table(2)).unwrap();
        let a = HModuleAlgebra::dual_group_translation(&h, &cyclic_group_table(2)).unwrap();
        assert!(a.validate().passed());
        let cp = h.crossed_product(&a).unwrap();
        assert_eq!(cp.dim, 4);
        assert!(cp.validate().passed());
    }
}
