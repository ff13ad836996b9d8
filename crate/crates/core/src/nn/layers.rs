use serde::{Deserialize, Serialize};

use super::tape::{Tape, Var};
use super::tensor::Tensor;
use crate::sampler::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Activation {
    Relu,
    Tanh,
}

impl Activation {
    pub(crate) fn apply(self, tape: &mut Tape, x: Var) -> Var {
        match self {
            Activation::Relu => tape.relu(x),
            Activation::Tanh => tape.tanh(x),
        }
    }

    pub(crate) fn code(self) -> u8 {
        match self {
            Activation::Relu => 0,
            Activation::Tanh => 1,
        }
    }

    pub(crate) fn from_code(c: u8) -> Option<Self> {
        match c {
            0 => Some(Activation::Relu),
            1 => Some(Activation::Tanh),
            _ => None,
        }
    }
}

/// Affine layer `x W + b` with `W: in x out`, `b: 1 x out`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense {
    pub w: Tensor,
    pub b: Tensor,
}

impl Dense {
    pub fn zeros(fan_in: usize, fan_out: usize) -> Self {
        Self { w: Tensor::zeros(fan_in, fan_out), b: Tensor::zeros(1, fan_out) }
    }

    /// Glorot-uniform weights, zero bias.
    pub fn glorot(fan_in: usize, fan_out: usize, rng: &mut Rng) -> Self {
        let limit = (6.0 / (fan_in + fan_out) as f64).sqrt();
        let data = (0..fan_in * fan_out).map(|_| limit * (2.0 * rng.uniform() - 1.0)).collect();
        Self { w: Tensor::from_vec(fan_in, fan_out, data).expect("shape"), b: Tensor::zeros(1, fan_out) }
    }

    pub fn fan_in(&self) -> usize {
        self.w.rows()
    }

    pub fn fan_out(&self) -> usize {
        self.w.cols()
    }

    /// Records the layer on `tape`, registering its parameters as leaves
    /// appended to `params`.
    pub fn forward(&self, tape: &mut Tape, x: Var, params: &mut Vec<Var>) -> Var {
        let w = tape.leaf(self.w.clone());
        let b = tape.leaf(self.b.clone());
        params.push(w);
        params.push(b);
        let xw = tape.matmul(x, w);
        tape.add_row(xw, b)
    }
}

/// Stack of dense layers. Every layer but the last is followed by the
/// activation; the last one too when `activate_last` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct Mlp {
    pub layers: Vec<Dense>,
    pub activation: Activation,
    pub activate_last: bool,
}

impl Mlp {
    /// Layer widths `sizes[0] → sizes[1] → …`.
    pub fn glorot(sizes: &[usize], activation: Activation, activate_last: bool, rng: &mut Rng) -> Self {
        let layers = sizes.windows(2).map(|w| Dense::glorot(w[0], w[1], rng)).collect();
        Self { layers, activation, activate_last }
    }

    pub fn zeros(sizes: &[usize], activation: Activation, activate_last: bool) -> Self {
        let layers = sizes.windows(2).map(|w| Dense::zeros(w[0], w[1])).collect();
        Self { layers, activation, activate_last }
    }

    pub fn forward(&self, tape: &mut Tape, x: Var, params: &mut Vec<Var>) -> Var {
        let mut h = x;
        let n = self.layers.len();
        for (i, layer) in self.layers.iter().enumerate() {
            h = layer.forward(tape, h, params);
            if i + 1 < n || self.activate_last {
                h = self.activation.apply(tape, h);
            }
        }
        h
    }

    pub fn output_dim(&self) -> Option<usize> {
        self.layers.last().map(Dense::fan_out)
    }

    pub fn tensors(&self) -> Vec<&Tensor> {
        self.layers.iter().flat_map(|l| [&l.w, &l.b]).collect()
    }

    pub fn tensors_mut(&mut self) -> Vec<&mut Tensor> {
        self.layers.iter_mut().flat_map(|l| [&mut l.w, &mut l.b]).collect()
    }
}

/// Runs `mlp` on `x` and returns the output together with the tape and the
/// parameter leaves (in declaration order) for a later backward pass.
pub fn mlp_forward(mlp: &Mlp, x: &Tensor) -> (Var, Tape, Vec<Var>) {
    let mut tape = Tape::new();
    let xv = tape.leaf(x.clone());
    let mut params = Vec::new();
    let out = mlp.forward(&mut tape, xv, &mut params);
    (out, tape, params)
}

/// Adam with bias correction.
#[derive(Debug, Clone)]
pub struct Adam {
    pub lr: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
    t: u64,
    m: Vec<Tensor>,
    v: Vec<Tensor>,
}

impl Adam {
    pub fn new(lr: f64) -> Self {
        Self { lr, beta1: 0.9, beta2: 0.999, eps: 1e-8, t: 0, m: Vec::new(), v: Vec::new() }
    }

    pub fn steps(&self) -> u64 {
        self.t
    }

    /// One descent step on `params` along `grads`.
    pub fn step(&mut self, params: Vec<&mut Tensor>, grads: &[Tensor]) {
        assert_eq!(params.len(), grads.len());
        if self.m.is_empty() {
            self.m = grads.iter().map(|g| Tensor::zeros(g.rows(), g.cols())).collect();
            self.v = self.m.clone();
        }
        self.t += 1;
        let c1 = 1.0 - self.beta1.powi(self.t as i32);
        let c2 = 1.0 - self.beta2.powi(self.t as i32);
        for (i, (p, g)) in params.into_iter().zip(grads).enumerate() {
            let m = self.m[i].data_mut();
            let v = self.v[i].data_mut();
            for (j, (pj, &gj)) in p.data_mut().iter_mut().zip(g.data()).enumerate() {
                m[j] = self.beta1 * m[j] + (1.0 - self.beta1) * gj;
                v[j] = self.beta2 * v[j] + (1.0 - self.beta2) * gj * gj;
                *pj -= self.lr * (m[j] / c1) / ((v[j] / c2).sqrt() + self.eps);
            }
        }
    }
}
