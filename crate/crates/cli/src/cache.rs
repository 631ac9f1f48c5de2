//! On-disk cache of graded bases and generator bracket matrices.
//!
//! Each entry is a text file:
//!
//! ```text
//! purebraid-cache 1
//! kind=bracket n=4 q=2 g=B(1,4)
//! sha256=<hex digest of the body>
//! <body>
//! ```
//!
//! Entries whose header, metadata or checksum do not match are reported on
//! stderr and recomputed.

use std::cell::RefCell;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use purebraid::braidlie::{Generator, GradedBasis, PureBraidLie};
use purebraid::central::{Direct, MatrixSource};
use purebraid::exactla::IntMatrix;
use purebraid::freelie::LyndonWord;
use sha2::{Digest, Sha256};

pub const FORMAT_HEADER: &str = "purebraid-cache 1";
const EXTENSION: &str = "pbc";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: usize,
    pub misses: usize,
    pub rejected: usize,
}

pub struct DiskCache {
    dir: PathBuf,
    stats: RefCell<CacheStats>,
    warnings: RefCell<Vec<String>>,
}

/// Status of one cache file, as listed by `cache inspect`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryStatus {
    pub file: String,
    pub meta: Option<String>,
    pub problem: Option<String>,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir, stats: RefCell::default(), warnings: RefCell::default() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn stats(&self) -> CacheStats {
        *self.stats.borrow()
    }

    /// Drains the warnings collected so far.
    pub fn take_warnings(&self) -> Vec<String> {
        std::mem::take(&mut self.warnings.borrow_mut())
    }

    fn basis_meta(n: usize, q: usize) -> String {
        format!("kind=basis n={n} q={q}")
    }

    fn bracket_meta(n: usize, q: usize, g: Generator) -> String {
        format!("kind=bracket n={n} q={q} g={g}")
    }

    fn path_for(&self, meta: &str) -> PathBuf {
        let stem: String = meta
            .split(' ')
            .map(|kv| kv.split_once('=').map_or(kv, |(_, v)| v))
            .collect::<Vec<_>>()
            .join("-")
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
            .collect();
        self.dir.join(format!("{stem}.{EXTENSION}"))
    }

    fn load(&self, meta: &str) -> Option<String> {
        let path = self.path_for(meta);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                self.reject(&path, &format!("unreadable: {e}"));
                return None;
            }
        };
        match check_entry(&text) {
            Ok((m, body)) if m == meta => Some(body.to_string()),
            Ok((m, _)) => {
                self.reject(&path, &format!("metadata `{m}` does not match `{meta}`"));
                None
            }
            Err(problem) => {
                self.reject(&path, &problem);
                None
            }
        }
    }

    fn reject(&self, path: &Path, problem: &str) {
        self.stats.borrow_mut().rejected += 1;
        self.warnings
            .borrow_mut()
            .push(format!("cache entry {} rejected ({problem}); recomputing", path.display()));
    }

    fn store(&self, meta: &str, body: &str) {
        let path = self.path_for(meta);
        let text = format!("{FORMAT_HEADER}\n{meta}\nsha256={}\n{body}", digest(body));
        // Write then rename so readers never see a partial file.
        let tmp = path.with_extension("tmp");
        let result = fs::write(&tmp, text).and_then(|_| fs::rename(&tmp, &path));
        if let Err(e) = result {
            self.warnings.borrow_mut().push(format!("could not write cache entry {}: {e}", path.display()));
        }
    }

    /// Every cache file in the directory with its validity.
    pub fn inspect(&self) -> std::io::Result<Vec<EntryStatus>> {
        let mut out = Vec::new();
        for path in self.entry_paths()? {
            let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
            let status = match fs::read_to_string(&path) {
                Ok(text) => match check_entry(&text) {
                    Ok((meta, body)) => {
                        let problem = validate_body(meta, body).err();
                        let problem = problem.or_else(|| {
                            (self.path_for(meta) != path).then(|| "file name does not match metadata".to_string())
                        });
                        EntryStatus { file, meta: Some(meta.to_string()), problem }
                    }
                    Err(p) => EntryStatus { file, meta: None, problem: Some(p) },
                },
                Err(e) => EntryStatus { file, meta: None, problem: Some(format!("unreadable: {e}")) },
            };
            out.push(status);
        }
        Ok(out)
    }

    /// Removes every cache file; returns how many were removed.
    pub fn clear(&self) -> std::io::Result<usize> {
        let paths = self.entry_paths()?;
        for p in &paths {
            fs::remove_file(p)?;
        }
        Ok(paths.len())
    }

    fn entry_paths(&self) -> std::io::Result<Vec<PathBuf>> {
        let mut paths: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == EXTENSION))
            .collect();
        paths.sort();
        Ok(paths)
    }

    /// Fills the cache for degrees `1..=max_q`: bases through `max_q + 1`
    /// and all generator bracket matrices out of each degree.
    pub fn build(&self, lie: &PureBraidLie, max_q: usize) -> purebraid::Result<()> {
        for q in 1..=max_q {
            self.basis(lie, q)?;
            self.basis(lie, q + 1)?;
            for g in lie.generators() {
                self.bracket_matrix(lie, q, g)?;
            }
        }
        Ok(())
    }
}

fn digest(body: &str) -> String {
    let mut out = String::with_capacity(64);
    for b in Sha256::digest(body.as_bytes()) {
        let _ = write!(out, "{b:02x}");
    }
    out
}

/// Splits an entry into metadata and body after checking the header and
/// checksum.
fn check_entry(text: &str) -> Result<(&str, &str), String> {
    let mut parts = text.splitn(4, '\n');
    let header = parts.next().unwrap_or_default();
    if header != FORMAT_HEADER {
        return Err(format!("unsupported format header `{header}`"));
    }
    let meta = parts.next().ok_or("missing metadata")?;
    let sum = parts.next().and_then(|l| l.strip_prefix("sha256=")).ok_or("missing checksum")?;
    let body = parts.next().ok_or("missing body")?;
    if digest(body) != sum {
        return Err("checksum mismatch".into());
    }
    Ok((meta, body))
}

fn validate_body(meta: &str, body: &str) -> Result<(), String> {
    if meta.starts_with("kind=basis") {
        parse_basis_body(body).map(|_| ())
    } else if meta.starts_with("kind=bracket") {
        parse_matrix_body(body).map(|_| ())
    } else {
        Err(format!("unknown kind in `{meta}`"))
    }
}

fn basis_body(b: &GradedBasis) -> String {
    let mut out = String::new();
    for (m, w) in b.entries() {
        let letters: Vec<String> = w.letters().iter().map(u8::to_string).collect();
        let _ = writeln!(out, "{m} {}", letters.join(","));
    }
    out
}

fn parse_basis_body(body: &str) -> Result<Vec<(usize, LyndonWord)>, String> {
    body.lines()
        .map(|line| {
            let (m, w) = line.split_once(' ').ok_or("malformed basis line")?;
            let m: usize = m.parse().map_err(|_| "malformed component")?;
            let letters = w
                .split(',')
                .map(|l| l.parse::<u8>().map_err(|_| "malformed letter".to_string()))
                .collect::<Result<Vec<u8>, _>>()?;
            if letters.iter().any(|&l| l as usize + 1 >= m) {
                return Err("letter outside its component".into());
            }
            Ok((m, LyndonWord::new(letters).map_err(|e| e.to_string())?))
        })
        .collect()
}

fn matrix_body(m: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(BigInt::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn parse_matrix_body(body: &str) -> Result<IntMatrix, String> {
    let mut lines = body.lines();
    let dims = lines.next().ok_or("missing dimensions")?;
    let (r, c) = dims.split_once(' ').ok_or("malformed dimensions")?;
    let rows: usize = r.parse().map_err(|_| "malformed dimensions")?;
    let cols: usize = c.parse().map_err(|_| "malformed dimensions")?;
    let mut data = Vec::with_capacity(rows * cols);
    for line in lines {
        for tok in line.split_whitespace() {
            data.push(tok.parse::<BigInt>().map_err(|_| "malformed entry")?);
        }
    }
    IntMatrix::from_vec(rows, cols, data).map_err(|e| e.to_string())
}

impl MatrixSource for DiskCache {
    fn basis(&self, lie: &PureBraidLie, q: usize) -> purebraid::Result<GradedBasis> {
        lie.check_degree(q)?;
        let meta = Self::basis_meta(lie.n(), q);
        if let Some(body) = self.load(&meta) {
            match parse_basis_body(&body) {
                Ok(entries) => {
                    self.stats.borrow_mut().hits += 1;
                    return Ok(GradedBasis::from_entries(lie.n(), q, entries));
                }
                Err(p) => self.reject(&self.path_for(&meta), &p),
            }
        }
        self.stats.borrow_mut().misses += 1;
        let b = Direct.basis(lie, q)?;
        self.store(&meta, &basis_body(&b));
        Ok(b)
    }

    fn bracket_matrix(&self, lie: &PureBraidLie, q: usize, g: Generator) -> purebraid::Result<IntMatrix> {
        lie.check_degree(q + 1)?;
        let meta = Self::bracket_meta(lie.n(), q, g);
        if let Some(body) = self.load(&meta) {
            match parse_matrix_body(&body) {
                Ok(m) => {
                    self.stats.borrow_mut().hits += 1;
                    return Ok(m);
                }
                Err(p) => self.reject(&self.path_for(&meta), &p),
            }
        }
        self.stats.borrow_mut().misses += 1;
        let m = Direct.bracket_matrix(lie, q, g)?;
        self.store(&meta, &matrix_body(&m));
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path()).unwrap();
        let lie = PureBraidLie::new(4).unwrap();
        let g = Generator::new(1, 4).unwrap();
        let b = cache.basis(&lie, 3).unwrap();
        let m = cache.bracket_matrix(&lie, 2, g).unwrap();
        assert_eq!(cache.stats(), CacheStats { hits: 0, misses: 2, rejected: 0 });
        assert_eq!(cache.basis(&lie, 3).unwrap(), b);
        assert_eq!(cache.bracket_matrix(&lie, 2, g).unwrap(), m);
        assert_eq!(cache.stats().hits, 2);
        assert!(cache.inspect().unwrap().iter().all(|e| e.problem.is_none()));

        // Flip one matrix entry without updating the checksum.
        let path = cache.path_for(&DiskCache::bracket_meta(4, 2, g));
        let text = fs::read_to_string(&path).unwrap();
        let body_start = text.match_indices('\n').nth(3).unwrap().0 + 1;
        let (head, body) = text.split_at(body_start);
        let tampered = body.replacen('0', "7", 1);
        assert_ne!(tampered, body);
        fs::write(&path, format!("{head}{tampered}")).unwrap();
        assert!(cache.inspect().unwrap().iter().any(|e| e.problem.as_deref() == Some("checksum mismatch")));
        assert_eq!(cache.bracket_matrix(&lie, 2, g).unwrap(), m);
        assert_eq!(cache.stats().rejected, 1);
        assert_eq!(cache.take_warnings().len(), 1);
        // The entry was rewritten.
        assert!(cache.inspect().unwrap().iter().all(|e| e.problem.is_none()));

        // A stale format version is recomputed too.
        let path = cache.path_for(&DiskCache::basis_meta(4, 3));
        let text = fs::read_to_string(&path).unwrap().replacen(FORMAT_HEADER, "purebraid-cache 0", 1);
        fs::write(&path, text).unwrap();
        assert_eq!(cache.basis(&lie, 3).unwrap(), b);
        assert_eq!(cache.stats().rejected, 2);

        assert_eq!(cache.clear().unwrap(), 2);
        assert!(cache.inspect().unwrap().is_empty());
    }
}
