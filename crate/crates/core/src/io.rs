//! Dataset ingestion and plain-text output helpers.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use flate2::read::GzDecoder;

use crate::error::{Error, Result};
use crate::nn::Tensor;
use crate::sampler::Rng;

pub const IDX_IMAGES_MAGIC: u32 = 0x0000_0803;
pub const IDX_LABELS_MAGIC: u32 = 0x0000_0801;

/// Environment variable naming the directory that holds the MNIST files.
pub const DATA_DIR_ENV: &str = "SVAE_DATA_DIR";

const MNIST_FILES: [&str; 4] =
    ["train-images-idx3-ubyte", "train-labels-idx1-ubyte", "t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte"];

fn format_err(path: &Path, offset: usize, message: impl std::fmt::Display) -> Error {
    Error::Format { path: path.to_path_buf(), message: format!("at byte {offset}: {message}") }
}

/// File contents, transparently gunzipped when they start with the gzip
/// magic.
pub fn read_maybe_gz(path: &Path) -> Result<Vec<u8>> {
    let raw = fs::read(path).map_err(crate::error::with_path(path))?;
    if raw.starts_with(&[0x1f, 0x8b]) {
        let mut out = Vec::new();
        GzDecoder::new(&raw[..])
            .read_to_end(&mut out)
            .map_err(|e| format_err(path, 0, format!("gzip stream: {e}")))?;
        Ok(out)
    } else {
        Ok(raw)
    }
}

fn be_u32(bytes: &[u8], offset: usize, path: &Path) -> Result<u32> {
    bytes
        .get(offset..offset + 4)
        .map(|b| u32::from_be_bytes(b.try_into().expect("4 bytes")))
        .ok_or_else(|| format_err(path, offset, format!("header truncated, file has {} bytes", bytes.len())))
}

fn check_payload(bytes: &[u8], header: usize, expected: usize, path: &Path) -> Result<()> {
    let actual = bytes.len() - header;
    if actual != expected {
        return Err(format_err(
            path,
            header,
            format!("expected {expected} bytes of payload, found {actual}"),
        ));
    }
    Ok(())
}

/// Parses an IDX image file (`0x00000803`, dims `n x rows x cols`) into an
/// `n x (rows·cols)` tensor scaled to `[0, 1]`.
pub fn parse_idx_images(bytes: &[u8], path: &Path) -> Result<Tensor> {
    let magic = be_u32(bytes, 0, path)?;
    if magic != IDX_IMAGES_MAGIC {
        return Err(format_err(path, 0, format!("magic {magic:#010x}, expected {IDX_IMAGES_MAGIC:#010x} (images)")));
    }
    let n = be_u32(bytes, 4, path)? as usize;
    let rows = be_u32(bytes, 8, path)? as usize;
    let cols = be_u32(bytes, 12, path)? as usize;
    check_payload(bytes, 16, n * rows * cols, path)?;
    let data = bytes[16..].iter().map(|&b| b as f64 / 255.0).collect();
    Tensor::from_vec(n, rows * cols, data)
}

/// Parses an IDX label file (`0x00000801`).
pub fn parse_idx_labels(bytes: &[u8], path: &Path) -> Result<Vec<u8>> {
    let magic = be_u32(bytes, 0, path)?;
    if magic != IDX_LABELS_MAGIC {
        return Err(format_err(path, 0, format!("magic {magic:#010x}, expected {IDX_LABELS_MAGIC:#010x} (labels)")));
    }
    let n = be_u32(bytes, 4, path)? as usize;
    check_payload(bytes, 8, n, path)?;
    Ok(bytes[8..].to_vec())
}

pub fn load_idx_images(path: &Path) -> Result<Tensor> {
    parse_idx_images(&read_maybe_gz(path)?, path)
}

pub fn load_idx_labels(path: &Path) -> Result<Vec<u8>> {
    parse_idx_labels(&read_maybe_gz(path)?, path)
}

/// Serializes `n` images of `rows x cols` bytes as an IDX image file.
pub fn encode_idx_images(rows: usize, cols: usize, pixels: &[u8]) -> Vec<u8> {
    let n = pixels.len() / (rows * cols);
    let mut out = Vec::with_capacity(16 + pixels.len());
    for v in [IDX_IMAGES_MAGIC, n as u32, rows as u32, cols as u32] {
        out.extend_from_slice(&v.to_be_bytes());
    }
    out.extend_from_slice(pixels);
    out
}

pub fn encode_idx_labels(labels: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + labels.len());
    out.extend_from_slice(&IDX_LABELS_MAGIC.to_be_bytes());
    out.extend_from_slice(&(labels.len() as u32).to_be_bytes());
    out.extend_from_slice(labels);
    out
}

/// Grayscale images with labels.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageSet {
    pub images: Tensor,
    pub labels: Vec<u8>,
}

impl ImageSet {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// First `n` examples (or all of them).
    pub fn truncate(&self, n: usize) -> ImageSet {
        let idx: Vec<usize> = (0..n.min(self.len())).collect();
        self.subset(&idx)
    }

    pub fn subset(&self, idx: &[usize]) -> ImageSet {
        ImageSet { images: self.images.gather_rows(idx), labels: idx.iter().map(|&i| self.labels[i]).collect() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mnist {
    pub train: ImageSet,
    pub test: ImageSet,
}

fn locate(dir: &Path, stem: &str) -> Option<PathBuf> {
    [stem.to_string(), format!("{stem}.gz")].into_iter().map(|f| dir.join(f)).find(|p| p.is_file())
}

/// Directory holding the MNIST files: `explicit`, else `$SVAE_DATA_DIR`,
/// else `data/mnist`.
pub fn resolve_data_dir(explicit: Option<&Path>) -> PathBuf {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(DATA_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data/mnist"))
}

/// Loads the four standard MNIST files, raw or gzipped, from `dir`.
pub fn load_mnist(dir: &Path) -> Result<Mnist> {
    let mut paths = Vec::new();
    for stem in MNIST_FILES {
        paths.push(locate(dir, stem).ok_or_else(|| {
            Error::MissingData(format!("{stem}[.gz] not found in {}", dir.display()))
        })?);
    }
    let set = |img: &Path, lab: &Path| -> Result<ImageSet> {
        let images = load_idx_images(img)?;
        let labels = load_idx_labels(lab)?;
        if images.rows() != labels.len() {
            return Err(Error::Format {
                path: lab.to_path_buf(),
                message: format!("{} labels for {} images", labels.len(), images.rows()),
            });
        }
        Ok(ImageSet { images, labels })
    };
    Ok(Mnist { train: set(&paths[0], &paths[1])?, test: set(&paths[2], &paths[3])? })
}

/// Dynamic binarization: each pixel becomes 1 with probability equal to its
/// intensity.
pub fn binarize(images: &Tensor, rng: &mut Rng) -> Tensor {
    let data = images.data().iter().map(|&p| if rng.uniform() <= p { 1.0 } else { 0.0 }).collect();
    Tensor::from_vec(images.rows(), images.cols(), data).expect("same shape")
}

/// Procedural 28x28 digit-like images: each class is a fixed set of strokes,
/// jittered in position and intensity. Stands in for MNIST when the real
/// files are absent.
pub fn synthetic_digits(n: usize, rng: &mut Rng) -> ImageSet {
    // strokes as (r0, c0, r1, c1) in a 20x20 box
    const STROKES: [&[(f64, f64, f64, f64)]; 10] = [
        &[(2.0, 6.0, 2.0, 14.0), (2.0, 14.0, 18.0, 14.0), (18.0, 14.0, 18.0, 6.0), (18.0, 6.0, 2.0, 6.0)],
        &[(2.0, 10.0, 18.0, 10.0)],
        &[(2.0, 5.0, 2.0, 15.0), (2.0, 15.0, 10.0, 15.0), (10.0, 15.0, 18.0, 5.0), (18.0, 5.0, 18.0, 15.0)],
        &[(2.0, 5.0, 2.0, 15.0), (10.0, 7.0, 10.0, 15.0), (18.0, 5.0, 18.0, 15.0), (2.0, 15.0, 18.0, 15.0)],
        &[(2.0, 5.0, 11.0, 5.0), (11.0, 5.0, 11.0, 16.0), (2.0, 13.0, 18.0, 13.0)],
        &[(2.0, 15.0, 2.0, 5.0), (2.0, 5.0, 10.0, 5.0), (10.0, 5.0, 10.0, 15.0), (10.0, 15.0, 18.0, 15.0), (18.0, 15.0, 18.0, 5.0)],
        &[(2.0, 14.0, 18.0, 5.0), (18.0, 5.0, 18.0, 15.0), (18.0, 15.0, 11.0, 15.0), (11.0, 15.0, 11.0, 6.0)],
        &[(2.0, 5.0, 2.0, 15.0), (2.0, 15.0, 18.0, 8.0)],
        &[(2.0, 6.0, 2.0, 14.0), (2.0, 6.0, 18.0, 14.0), (2.0, 14.0, 18.0, 6.0), (18.0, 6.0, 18.0, 14.0)],
        &[(10.0, 15.0, 10.0, 5.0), (10.0, 5.0, 2.0, 5.0), (2.0, 5.0, 2.0, 15.0), (2.0, 15.0, 18.0, 15.0)],
    ];
    let mut data = vec![0.0; n * 784];
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let label = (rng.uniform() * 10.0).min(9.999) as usize;
        labels.push(label as u8);
        let dr = 4.0 + 4.0 * rng.uniform();
        let dc = 4.0 + 4.0 * rng.uniform();
        let slant = 0.3 * (rng.uniform() - 0.5);
        let ink = 0.7 + 0.3 * rng.uniform();
        let img = &mut data[i * 784..(i + 1) * 784];
        for &(r0, c0, r1, c1) in STROKES[label] {
            let steps = 40;
            for s in 0..=steps {
                let t = s as f64 / steps as f64;
                let r = r0 + t * (r1 - r0);
                let c = c0 + t * (c1 - c0) + slant * (r - 10.0);
                let (pr, pc) = ((r + dr).round() as isize, (c + dc).round() as isize);
                for (er, ec, w) in [(0, 0, 1.0), (1, 0, 0.5), (0, 1, 0.5), (-1, 0, 0.5), (0, -1, 0.5)] {
                    let (rr, cc) = (pr + er, pc + ec);
                    if (0..28).contains(&rr) && (0..28).contains(&cc) {
                        let px = &mut img[rr as usize * 28 + cc as usize];
                        *px = f64::max(*px, ink * w);
                    }
                }
            }
        }
    }
    ImageSet { images: Tensor::from_vec(n, 784, data).expect("shape"), labels }
}

/// `x` with 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes a CSV with a header row.
pub fn write_csv(path: &Path, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut out = std::io::BufWriter::new(fs::File::create(path).map_err(crate::error::with_path(path))?);
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        writeln!(out, "{}", row.join(","))?;
    }
    out.flush()?;
    Ok(())
}

/// Writes one JSON document per line.
pub fn write_ndjson<T: serde::Serialize>(path: &Path, records: &[T]) -> Result<()> {
    let mut out = std::io::BufWriter::new(fs::File::create(path).map_err(crate::error::with_path(path))?);
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Pretty JSON with a trailing newline.
pub fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    fs::write(path, s).map_err(crate::error::with_path(path))?;
    Ok(())
}
