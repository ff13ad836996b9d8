//! Reverse-mode differentiation over a linear record of tensor operations.
//!
//! Every op appends a node holding its output value. [`Tape::backward`]
//! walks the record once in reverse, so gradients can be seeded at any
//! intermediate node, not only at a scalar loss. The training loop relies on
//! this to inject the sampler's `(μ, κ)` gradients at the encoder heads.

use std::f64::consts::PI;

use super::tensor::Tensor;

/// Handle to a node on a [`Tape`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var(usize);

impl Var {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone)]
enum Op {
    Leaf,
    Constant,
    MatMul(Var, Var),
    AddRow(Var, Var),
    Relu(Var),
    Tanh(Var),
    Softplus(Var),
    Exp(Var),
    Add(Var, Var),
    Sub(Var, Var),
    Mul(Var, Var),
    Scale(Var, f64),
    AddScalar(Var),
    NormalizeRows(Var),
    SliceCols(Var, usize),
    Sum(Var),
    SumCols(Var),
    BernoulliLogLik(Var, Tensor),
    GaussianLogLik(Var, Tensor),
}

#[derive(Debug, Clone)]
struct Node {
    op: Op,
    value: Tensor,
    /// Some leaf is upstream, so the node takes part in backward sweeps.
    grad: bool,
}

/// Gradients indexed by [`Var`]; `None` for nodes no seed reaches.
#[derive(Debug, Clone, Default)]
pub struct Grads(Vec<Option<Tensor>>);

impl Grads {
    pub fn get(&self, v: Var) -> Option<&Tensor> {
        self.0.get(v.0).and_then(Option::as_ref)
    }

    /// Gradient of `v`, or zeros shaped like `like`.
    pub fn get_or_zeros(&self, v: Var, like: &Tensor) -> Tensor {
        self.get(v).cloned().unwrap_or_else(|| Tensor::zeros(like.rows(), like.cols()))
    }
}

#[derive(Debug, Clone, Default)]
pub struct Tape {
    nodes: Vec<Node>,
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// `log(1 + eˣ)` without overflow.
pub fn softplus(x: f64) -> f64 {
    x.max(0.0) + (-x.abs()).exp().ln_1p()
}

impl Tape {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn push(&mut self, op: Op, value: Tensor) -> Var {
        let grad = match &op {
            Op::Leaf => true,
            Op::Constant => false,
            Op::MatMul(a, b) | Op::AddRow(a, b) | Op::Add(a, b) | Op::Sub(a, b) | Op::Mul(a, b) => {
                self.needs_grad(*a) || self.needs_grad(*b)
            }
            Op::Relu(x)
            | Op::Tanh(x)
            | Op::Softplus(x)
            | Op::Exp(x)
            | Op::Scale(x, _)
            | Op::AddScalar(x)
            | Op::NormalizeRows(x)
            | Op::SliceCols(x, _)
            | Op::Sum(x)
            | Op::SumCols(x)
            | Op::BernoulliLogLik(x, _)
            | Op::GaussianLogLik(x, _) => self.needs_grad(*x),
        };
        self.nodes.push(Node { op, value, grad });
        Var(self.nodes.len() - 1)
    }

    fn needs_grad(&self, v: Var) -> bool {
        self.nodes[v.0].grad
    }

    pub fn value(&self, v: Var) -> &Tensor {
        &self.nodes[v.0].value
    }

    /// Input or parameter; backward sweeps report its gradient.
    pub fn leaf(&mut self, value: Tensor) -> Var {
        self.push(Op::Leaf, value)
    }

    /// Input that never needs a gradient, such as a data batch.
    pub fn constant(&mut self, value: Tensor) -> Var {
        self.push(Op::Constant, value)
    }

    pub fn matmul(&mut self, a: Var, b: Var) -> Var {
        let v = self.value(a).matmul(self.value(b));
        self.push(Op::MatMul(a, b), v)
    }

    /// `x + 1·bᵀ`: adds the single-row `b` to every row of `x`.
    pub fn add_row(&mut self, x: Var, b: Var) -> Var {
        let bias = self.value(b);
        assert_eq!(bias.rows(), 1);
        let mut v = self.value(x).clone();
        for r in 0..v.rows() {
            v.row_mut(r).iter_mut().zip(bias.data()).for_each(|(a, b)| *a += b);
        }
        self.push(Op::AddRow(x, b), v)
    }

    pub fn relu(&mut self, x: Var) -> Var {
        let v = self.value(x).map(|a| a.max(0.0));
        self.push(Op::Relu(x), v)
    }

    pub fn tanh(&mut self, x: Var) -> Var {
        let v = self.value(x).map(f64::tanh);
        self.push(Op::Tanh(x), v)
    }

    pub fn softplus(&mut self, x: Var) -> Var {
        let v = self.value(x).map(softplus);
        self.push(Op::Softplus(x), v)
    }

    pub fn exp(&mut self, x: Var) -> Var {
        let v = self.value(x).map(f64::exp);
        self.push(Op::Exp(x), v)
    }

    pub fn add(&mut self, a: Var, b: Var) -> Var {
        let v = self.value(a).zip_map(self.value(b), |x, y| x + y);
        self.push(Op::Add(a, b), v)
    }

    pub fn sub(&mut self, a: Var, b: Var) -> Var {
        let v = self.value(a).zip_map(self.value(b), |x, y| x - y);
        self.push(Op::Sub(a, b), v)
    }

    pub fn mul(&mut self, a: Var, b: Var) -> Var {
        let v = self.value(a).zip_map(self.value(b), |x, y| x * y);
        self.push(Op::Mul(a, b), v)
    }

    pub fn scale(&mut self, x: Var, c: f64) -> Var {
        let v = self.value(x).map(|a| a * c);
        self.push(Op::Scale(x, c), v)
    }

    pub fn add_scalar(&mut self, x: Var, c: f64) -> Var {
        let v = self.value(x).map(|a| a + c);
        self.push(Op::AddScalar(x), v)
    }

    /// Divides each row by its Euclidean norm. A zero row becomes `e₁`.
    pub fn normalize_rows(&mut self, x: Var) -> Var {
        let mut v = self.value(x).clone();
        for r in 0..v.rows() {
            let row = v.row_mut(r);
            let n = row.iter().map(|a| a * a).sum::<f64>().sqrt();
            if n == 0.0 {
                // no direction to keep; fall back to e₁ with zero gradient
                row[0] = 1.0;
            } else {
                row.iter_mut().for_each(|a| *a /= n);
            }
        }
        self.push(Op::NormalizeRows(x), v)
    }

    /// Columns `start..end`.
    pub fn slice_cols(&mut self, x: Var, start: usize, end: usize) -> Var {
        let src = self.value(x);
        assert!(start <= end && end <= src.cols());
        let mut v = Tensor::zeros(src.rows(), end - start);
        for r in 0..src.rows() {
            v.row_mut(r).copy_from_slice(&src.row(r)[start..end]);
        }
        self.push(Op::SliceCols(x, start), v)
    }

    /// Sum of all entries, as a 1x1 tensor.
    pub fn sum(&mut self, x: Var) -> Var {
        let s = self.value(x).sum();
        self.push(Op::Sum(x), Tensor::full(1, 1, s))
    }

    /// Per-row sums, as an n x 1 tensor.
    pub fn sum_cols(&mut self, x: Var) -> Var {
        let src = self.value(x);
        let data = (0..src.rows()).map(|r| src.row(r).iter().sum()).collect();
        let v = Tensor::from_vec(src.rows(), 1, data).expect("shape");
        self.push(Op::SumCols(x), v)
    }

    /// Per-row Bernoulli log-likelihood `Σ x·l − softplus(l)` of `target`
    /// under logits `l`; n x 1.
    pub fn bernoulli_loglik(&mut self, logits: Var, target: &Tensor) -> Var {
        let l = self.value(logits);
        assert_eq!(l.shape(), target.shape(), "logit/target shapes differ");
        let data = (0..l.rows())
            .map(|r| l.row(r).iter().zip(target.row(r)).map(|(&a, &x)| x * a - softplus(a)).sum())
            .collect();
        let v = Tensor::from_vec(l.rows(), 1, data).expect("shape");
        self.push(Op::BernoulliLogLik(logits, target.clone()), v)
    }

    /// Per-row unit-variance Gaussian log-likelihood of `target` with mean
    /// `mean`; n x 1.
    pub fn gaussian_loglik(&mut self, mean: Var, target: &Tensor) -> Var {
        let mu = self.value(mean);
        assert_eq!(mu.shape(), target.shape(), "mean/target shapes differ");
        let c = 0.5 * mu.cols() as f64 * (2.0 * PI).ln();
        let data = (0..mu.rows())
            .map(|r| {
                -0.5 * mu.row(r).iter().zip(target.row(r)).map(|(a, x)| (x - a) * (x - a)).sum::<f64>() - c
            })
            .collect();
        let v = Tensor::from_vec(mu.rows(), 1, data).expect("shape");
        self.push(Op::GaussianLogLik(mean, target.clone()), v)
    }

    fn accumulate(&self, g: &mut [Option<Tensor>], v: Var, t: Tensor) {
        if !self.needs_grad(v) {
            return;
        }
        match &mut g[v.0] {
            Some(acc) => acc.add_assign(&t),
            slot @ None => *slot = Some(t),
        }
    }

    /// Reverse sweep from the given seeds, which are added to the adjoints of
    /// their nodes before the sweep reaches them.
    pub fn backward(&self, seeds: &[(Var, Tensor)]) -> Grads {
        let mut g: Vec<Option<Tensor>> = vec![None; self.nodes.len()];
        for (v, t) in seeds {
            assert_eq!(t.shape(), self.value(*v).shape(), "seed shape mismatch");
            self.accumulate(&mut g, *v, t.clone());
        }
        for i in (0..self.nodes.len()).rev() {
            let Some(dy) = g[i].take() else { continue };
            let node = &self.nodes[i];
            let y = &node.value;
            match &node.op {
                // leaves keep their adjoint for the caller
                Op::Leaf => g[i] = Some(dy),
                Op::Constant => {}
                Op::MatMul(a, b) => {
                    if self.needs_grad(*a) {
                        let da = Tensor::matmul_t(&dy, false, self.value(*b), true);
                        self.accumulate(&mut g, *a, da);
                    }
                    if self.needs_grad(*b) {
                        let db = Tensor::matmul_t(self.value(*a), true, &dy, false);
                        self.accumulate(&mut g, *b, db);
                    }
                }
                Op::AddRow(x, b) => {
                    let mut db = Tensor::zeros(1, dy.cols());
                    for r in 0..dy.rows() {
                        db.data_mut().iter_mut().zip(dy.row(r)).for_each(|(a, b)| *a += b);
                    }
                    self.accumulate(&mut g, *x, dy.clone());
                    self.accumulate(&mut g, *b, db);
                }
                Op::Relu(x) => {
                    let dx = dy.zip_map(y, |d, v| if v > 0.0 { d } else { 0.0 });
                    self.accumulate(&mut g, *x, dx);
                }
                Op::Tanh(x) => {
                    let dx = dy.zip_map(y, |d, v| d * (1.0 - v * v));
                    self.accumulate(&mut g, *x, dx);
                }
                Op::Softplus(x) => {
                    let dx = dy.zip_map(self.value(*x), |d, a| d * sigmoid(a));
                    self.accumulate(&mut g, *x, dx);
                }
                Op::Exp(x) => {
                    let dx = dy.zip_map(y, |d, v| d * v);
                    self.accumulate(&mut g, *x, dx);
                }
                Op::Add(a, b) => {
                    self.accumulate(&mut g, *a, dy.clone());
                    self.accumulate(&mut g, *b, dy);
                }
                Op::Sub(a, b) => {
                    self.accumulate(&mut g, *b, dy.map(|d| -d));
                    self.accumulate(&mut g, *a, dy);
                }
                Op::Mul(a, b) => {
                    let da = dy.zip_map(self.value(*b), |d, v| d * v);
                    let db = dy.zip_map(self.value(*a), |d, v| d * v);
                    self.accumulate(&mut g, *a, da);
                    self.accumulate(&mut g, *b, db);
                }
                Op::Scale(x, c) => self.accumulate(&mut g, *x, dy.map(|d| d * c)),
                Op::AddScalar(x) => self.accumulate(&mut g, *x, dy),
                Op::NormalizeRows(x) => {
                    let src = self.value(*x);
                    let mut dx = Tensor::zeros(src.rows(), src.cols());
                    for r in 0..src.rows() {
                        let n = src.row(r).iter().map(|a| a * a).sum::<f64>().sqrt();
                        if n == 0.0 {
                            continue;
                        }
                        let yr = y.row(r);
                        let gr = dy.row(r);
                        let proj: f64 = yr.iter().zip(gr).map(|(a, b)| a * b).sum();
                        dx.row_mut(r)
                            .iter_mut()
                            .zip(yr.iter().zip(gr))
                            .for_each(|(o, (yv, gv))| *o = (gv - yv * proj) / n);
                    }
                    self.accumulate(&mut g, *x, dx);
                }
                Op::SliceCols(x, start) => {
                    let src = self.value(*x);
                    let mut dx = Tensor::zeros(src.rows(), src.cols());
                    for r in 0..src.rows() {
                        dx.row_mut(r)[*start..*start + dy.cols()].copy_from_slice(dy.row(r));
                    }
                    self.accumulate(&mut g, *x, dx);
                }
                Op::Sum(x) => {
                    let src = self.value(*x);
                    self.accumulate(&mut g, *x, Tensor::full(src.rows(), src.cols(), dy.data()[0]));
                }
                Op::SumCols(x) => {
                    let src = self.value(*x);
                    let mut dx = Tensor::zeros(src.rows(), src.cols());
                    for r in 0..src.rows() {
                        let d = dy.data()[r];
                        dx.row_mut(r).iter_mut().for_each(|o| *o = d);
                    }
                    self.accumulate(&mut g, *x, dx);
                }
                Op::BernoulliLogLik(l, target) => {
                    let lv = self.value(*l);
                    let mut dl = Tensor::zeros(lv.rows(), lv.cols());
                    for r in 0..lv.rows() {
                        let d = dy.data()[r];
                        dl.row_mut(r)
                            .iter_mut()
                            .zip(lv.row(r).iter().zip(target.row(r)))
                            .for_each(|(o, (&a, &x))| *o = d * (x - sigmoid(a)));
                    }
                    self.accumulate(&mut g, *l, dl);
                }
                Op::GaussianLogLik(m, target) => {
                    let mv = self.value(*m);
                    let mut dm = Tensor::zeros(mv.rows(), mv.cols());
                    for r in 0..mv.rows() {
                        let d = dy.data()[r];
                        dm.row_mut(r)
                            .iter_mut()
                            .zip(mv.row(r).iter().zip(target.row(r)))
                            .for_each(|(o, (a, x))| *o = d * (x - a));
                    }
                    self.accumulate(&mut g, *m, dm);
                }
            }
        }
        Grads(g)
    }
}
