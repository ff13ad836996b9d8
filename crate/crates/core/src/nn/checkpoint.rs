//! Binary model snapshots.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! "SVAECKPT"  u32 version
//! u8 posterior  u8 likelihood  u8 activation
//! u32 input_dim  u32 latent_dim  u32 n_hidden  u32 hidden[n_hidden]
//! u32 n_tensors  { u32 rows  u32 cols  f64 data[rows*cols] }*
//! ```
//!
//! Tensors follow [`Vae::params`] order and are checked against the shapes
//! implied by the header.

use std::fs;
use std::path::Path;

use super::layers::Activation;
use super::vae::{Likelihood, PosteriorKind, Vae, VaeConfig};
use crate::error::{Error, Result};

const MAGIC: &[u8; 8] = b"SVAECKPT";
const VERSION: usize = 1;

fn posterior_code(p: PosteriorKind) -> u8 {
    match p {
        PosteriorKind::Vmf => 0,
        PosteriorKind::Normal => 1,
        PosteriorKind::Ae => 2,
    }
}

fn likelihood_code(l: Likelihood) -> u8 {
    match l {
        Likelihood::Bernoulli => 0,
        Likelihood::Gaussian => 1,
    }
}

/// Serializes `vae` to bytes.
pub fn to_bytes(vae: &Vae) -> Vec<u8> {
    let cfg = vae.config();
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(VERSION as u32).to_le_bytes());
    out.extend_from_slice(&[
        posterior_code(cfg.posterior),
        likelihood_code(cfg.likelihood),
        cfg.activation.code(),
    ]);
    let put = |out: &mut Vec<u8>, v: usize| out.extend_from_slice(&(v as u32).to_le_bytes());
    put(&mut out, cfg.input_dim);
    put(&mut out, cfg.latent_dim);
    put(&mut out, cfg.hidden.len());
    for &h in &cfg.hidden {
        put(&mut out, h);
    }
    let params = vae.params();
    put(&mut out, params.len());
    for t in params {
        put(&mut out, t.rows());
        put(&mut out, t.cols());
        for v in t.data() {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
    path: &'a Path,
}

impl Reader<'_> {
    fn fail(&self, message: impl Into<String>) -> Error {
        Error::Format { path: self.path.to_path_buf(), message: format!("at byte {}: {}", self.pos, message.into()) }
    }

    fn take(&mut self, n: usize) -> Result<&[u8]> {
        if self.bytes.len() - self.pos < n {
            return Err(self.fail(format!("unexpected end of file, needed {n} more bytes")));
        }
        let s = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<usize> {
        let b = self.take(4)?;
        Ok(u32::from_le_bytes(b.try_into().expect("4 bytes")) as usize)
    }
}

/// Parses a snapshot; `path` is only used in error messages.
pub fn from_bytes(bytes: &[u8], path: &Path) -> Result<Vae> {
    let mut r = Reader { bytes, pos: 0, path };
    if r.take(8)? != MAGIC {
        r.pos = 0;
        return Err(r.fail("bad magic, not a model checkpoint"));
    }
    let version = r.u32()?;
    if version != VERSION {
        return Err(r.fail(format!("unsupported version {version}")));
    }
    let posterior = match r.u8()? {
        0 => PosteriorKind::Vmf,
        1 => PosteriorKind::Normal,
        2 => PosteriorKind::Ae,
        c => return Err(r.fail(format!("unknown posterior code {c}"))),
    };
    let likelihood = match r.u8()? {
        0 => Likelihood::Bernoulli,
        1 => Likelihood::Gaussian,
        c => return Err(r.fail(format!("unknown likelihood code {c}"))),
    };
    let code = r.u8()?;
    let activation = Activation::from_code(code).ok_or_else(|| r.fail(format!("unknown activation code {code}")))?;
    let input_dim = r.u32()?;
    let latent_dim = r.u32()?;
    let n_hidden = r.u32()?;
    if n_hidden > 64 {
        return Err(r.fail(format!("implausible hidden layer count {n_hidden}")));
    }
    let hidden = (0..n_hidden).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
    let config = VaeConfig { input_dim, latent_dim, hidden, posterior, likelihood, activation };
    let mut vae = Vae::zeros(config).map_err(|e| r.fail(e.to_string()))?;
    let count = r.u32()?;
    let expected = vae.params().len();
    if count != expected {
        return Err(r.fail(format!("{count} tensors, architecture needs {expected}")));
    }
    for t in vae.params_mut() {
        let (rows, cols) = (r.u32()?, r.u32()?);
        if (rows, cols) != t.shape() {
            return Err(r.fail(format!("tensor is {rows}x{cols}, expected {}x{}", t.rows(), t.cols())));
        }
        for v in t.data_mut() {
            *v = f64::from_le_bytes(r.take(8)?.try_into().expect("8 bytes"));
        }
    }
    if r.pos != bytes.len() {
        return Err(r.fail("trailing bytes"));
    }
    Ok(vae)
}

pub fn save(vae: &Vae, path: &Path) -> Result<()> {
    fs::write(path, to_bytes(vae)).map_err(crate::error::with_path(path))?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Vae> {
    from_bytes(&fs::read(path).map_err(crate::error::with_path(path))?, path)
}
