//! Rota-Baxter operators as first-class objects: construction from a tensor
//! and a bilinear form, identity verification, weight inference and companion
//! operators.

use crate::algebra::{same_algebra, AlgebraElement, AlgebraSpec, BilinearForm};
use crate::exactlinalg::{format_scalar, parse_scalar, Matrix, Scalar};
use crate::yangbaxter::{cybe_residual, is_skew, Tensor2};
use crate::{Error, Result};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A linear operator on an algebra; column `j` of the matrix is the image of
/// `e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOperator {
    pub alg: Arc<AlgebraSpec>,
    pub matrix: Matrix,
}

impl LinearOperator {
    pub fn new(alg: &Arc<AlgebraSpec>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != alg.dim || matrix.cols() != alg.dim {
            return Err(Error::Input(format!(
                "operator matrix is {}x{}, algebra {} has dimension {}",
                matrix.rows(),
                matrix.cols(),
                alg.name,
                alg.dim
            )));
        }
        Ok(LinearOperator {
            alg: Arc::clone(alg),
            matrix,
        })
    }

    pub fn identity(alg: &Arc<AlgebraSpec>) -> Self {
        LinearOperator {
            alg: Arc::clone(alg),
            matrix: Matrix::identity(alg.dim),
        }
    }

    pub fn zero(alg: &Arc<AlgebraSpec>) -> Self {
        LinearOperator {
            alg: Arc::clone(alg),
            matrix: Matrix::zero(alg.dim, alg.dim),
        }
    }

    pub fn apply(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            alg: Arc::clone(&self.alg),
            coords: self.matrix.mul_vec(&a.coords),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearOperator {
        LinearOperator {
            alg: Arc::clone(&self.alg),
            matrix: self.matrix.scale(c),
        }
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        LinearOperator {
            alg: Arc::clone(&self.alg),
            matrix: self.matrix.add(&other.matrix),
        }
    }
}

/// Builds `R(a) = sum omega(a_i, a) b_i` from a tensor and a bilinear form:
/// `R(e_k) = sum_{ij} coeff[i][j] omega(e_i, e_k) e_j`.
pub fn from_r(r: &Tensor2, form: &BilinearForm) -> Result<LinearOperator> {
    if !same_algebra(&r.alg, &form.alg) {
        return Err(Error::Input(format!(
            "tensor over {} with form over {}",
            r.alg.name, form.alg.name
        )));
    }
    // matrix = C^T G
    LinearOperator::new(&r.alg, r.coeff.transpose().mul(&form.gram))
}

/// The Rota-Baxter defect `R(x)R(y) - R(R(x)y + xR(y) + lambda xy)`;
/// zero iff the identity of weight `lambda` holds at `(x, y)`.
pub fn rb_defect(
    op: &LinearOperator,
    lambda: &Scalar,
    x: &AlgebraElement,
    y: &AlgebraElement,
) -> Result<AlgebraElement> {
    if !same_algebra(&op.alg, &x.alg) || !same_algebra(&op.alg, &y.alg) {
        return Err(Error::Input("operator and elements over different algebras".into()));
    }
    let alg = &op.alg;
    let rx = op.apply(x);
    let ry = op.apply(y);
    let lhs = alg.mul_coords(&rx.coords, &ry.coords);
    let mut inner: Vec<Scalar> = alg
        .mul_coords(&rx.coords, &y.coords)
        .iter()
        .zip(&alg.mul_coords(&x.coords, &ry.coords))
        .zip(&alg.mul_coords(&x.coords, &y.coords))
        .map(|((a, b), c)| a + b + lambda * c)
        .collect();
    inner = op.matrix.mul_vec(&inner);
    Ok(AlgebraElement {
        alg: Arc::clone(alg),
        coords: lhs.iter().zip(&inner).map(|(a, b)| a - b).collect(),
    })
}

/// Verdict of weight inference.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightVerdict {
    /// The identity holds exactly at this weight and no other.
    Weight(Scalar),
    /// The operator annihilates all products and the weight-free part
    /// vanishes: the identity holds for every weight.
    Indeterminate,
    /// No weight makes the identity hold; see the defects.
    Failed,
}

impl WeightVerdict {
    pub fn to_json_string(&self) -> String {
        match self {
            WeightVerdict::Weight(w) => format_scalar(w),
            WeightVerdict::Indeterminate => "any".into(),
            WeightVerdict::Failed => "none".into(),
        }
    }
}

/// Weight-inference report. `defects` lists the basis pairs at which the
/// identity fails (empty unless the verdict is `Failed`).
#[derive(Clone, Debug)]
pub struct RbReport {
    pub operator: LinearOperator,
    pub verdict: WeightVerdict,
    pub defects: Vec<(usize, usize, Vec<Scalar>)>,
}

/// Infers the weight from the identity, treated as linear in lambda on each
/// basis pair: the lambda coefficient is `R(e_i e_j)`. Requires an
/// anticommutative algebra (so pairs `i < j` suffice).
pub fn infer_weight(op: &LinearOperator) -> RbReport {
    let alg = &op.alg;
    let n = alg.dim;
    let mut lambda: Option<Scalar> = None;
    let mut defects = Vec::new();
    let zero = Scalar::zero();
    // base parts: A_ij = R(e_i)R(e_j) - R(R(e_i)e_j + e_i R(e_j)),
    // coefficient of lambda: -R(e_i e_j); collect and solve.
    let mut rows: Vec<(usize, usize, Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let x = alg.basis_element(i);
            let y = alg.basis_element(j);
            let base = rb_defect(op, &zero, &x, &y).expect("same algebra");
            let coeff = op.matrix.mul_vec(&alg.mul_coords(&x.coords, &y.coords));
            rows.push((i, j, base.coords, coeff));
        }
    }
    for (_, _, base, coeff) in &rows {
        if coeff.iter().all(Scalar::is_zero) {
            continue;
        }
        // base - lambda * coeff = 0 must hold componentwise
        let k = coeff.iter().position(|c| !c.is_zero()).unwrap();
        let candidate = &base[k] / &coeff[k];
        match &lambda {
            None => lambda = Some(candidate),
            Some(l) if *l != candidate => {
                return RbReport {
                    operator: op.clone(),
                    verdict: WeightVerdict::Failed,
                    defects: collect_defects(op, &candidate),
                };
            }
            _ => {}
        }
    }
    match lambda {
        Some(l) => {
            defects = collect_defects(op, &l);
            if defects.is_empty() {
                RbReport {
                    operator: op.clone(),
                    verdict: WeightVerdict::Weight(l),
                    defects,
                }
            } else {
                RbReport {
                    operator: op.clone(),
                    verdict: WeightVerdict::Failed,
                    defects,
                }
            }
        }
        None => {
            // no pair constrains lambda; the lambda-free part must vanish
            let zero_defects = collect_defects(op, &zero);
            if zero_defects.is_empty() {
                RbReport {
                    operator: op.clone(),
                    verdict: WeightVerdict::Indeterminate,
                    defects,
                }
            } else {
                RbReport {
                    operator: op.clone(),
                    verdict: WeightVerdict::Failed,
                    defects: zero_defects,
                }
            }
        }
    }
}

/// Defects of the identity at a fixed weight, over all basis pairs `i < j`.
pub fn collect_defects(op: &LinearOperator, lambda: &Scalar) -> Vec<(usize, usize, Vec<Scalar>)> {
    let alg = &op.alg;
    let n = alg.dim;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = rb_defect(op, lambda, &alg.basis_element(i), &alg.basis_element(j))
                .expect("same algebra");
            if !d.is_zero() {
                out.push((i, j, d.coords));
            }
        }
    }
    out
}

/// The companion operator `-lambda id - R`, Rota-Baxter of the same weight.
pub fn companion(op: &LinearOperator, lambda: &Scalar) -> LinearOperator {
    LinearOperator::identity(&op.alg)
        .scale(&-lambda.clone())
        .add(&op.scale(&-Scalar::one()))
}

/// Weight scaling: if `R` has weight `lambda` then `cR` has weight
/// `c lambda`.
pub fn weight_scaling(op: &LinearOperator, lambda: &Scalar, c: &Scalar) -> (LinearOperator, Scalar) {
    (op.scale(c), lambda * c)
}

/// Builds the weight-0 operator of a skew CYBE solution and verifies it.
/// Refuses non-skew or non-solving input, naming the failing check.
pub fn weight0_from_skew(r: &Tensor2, form: &BilinearForm) -> Result<RbReport> {
    if !is_skew(r) {
        return Err(Error::CheckFailed("tensor is not skew-symmetric".into()));
    }
    if !cybe_residual(r).is_zero() {
        return Err(Error::CheckFailed(
            "tensor does not solve the classical Yang-Baxter equation".into(),
        ));
    }
    let op = from_r(r, form)?;
    let report = infer_weight(&op);
    match &report.verdict {
        WeightVerdict::Weight(w) if w.is_zero() => Ok(report),
        WeightVerdict::Indeterminate => Ok(report),
        _ => Err(Error::CheckFailed(format!(
            "derived operator does not have weight 0 (verdict {})",
            report.verdict.to_json_string()
        ))),
    }
}

// ---------------------------------------------------------------------------
// JSON interface
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct OperatorJson {
    algebra: String,
    matrix: Vec<Vec<String>>,
}

pub fn operator_from_json(alg: &Arc<AlgebraSpec>, text: &str) -> Result<LinearOperator> {
    let raw: OperatorJson = serde_json::from_str(text)?;
    if raw.algebra != alg.name {
        return Err(Error::Input(format!(
            "operator declares algebra {:?} but {:?} was loaded",
            raw.algebra, alg.name
        )));
    }
    let rows = raw
        .matrix
        .iter()
        .map(|row| row.iter().map(|s| parse_scalar(s)).collect())
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    LinearOperator::new(alg, Matrix::from_rows(rows)?)
}

pub fn operator_to_json(op: &LinearOperator) -> String {
    let matrix = (0..op.matrix.rows())
        .map(|i| op.matrix.row(i).iter().map(format_scalar).collect())
        .collect();
    serde_json::to_string_pretty(&OperatorJson {
        algebra: op.alg.name.clone(),
        matrix,
    })
    .expect("serializable")
}
