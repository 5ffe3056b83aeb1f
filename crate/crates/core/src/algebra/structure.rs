//! Sparse structure constants grouped by (left block, right block), and their
//! on-disk cache.
//!
//! Binary layout: magic `ADJSC1`, then LEB128 varints: format version, n, d,
//! normalization tag (length + bytes), class count, class grade pairs, record
//! count, records `(i, j, k, zigzag(num), den)` in global indices, and finally a
//! little-endian FNV-1a 64 checksum of everything before it. A file starting
//! with `{` is read as the JSON variant.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use super::bracket::{bracket_basis, Q64, NORMALIZATION};
use super::{Algebra, Grading};
use crate::error::{Error, Result};

const MAGIC: &[u8; 6] = b"ADJSC1";
pub const FORMAT_VERSION: u64 = 1;

/// Constants of one block pair, in CSR form by left local index:
/// `(right local index, output global index, value)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ClassTable {
    offsets: Vec<usize>,
    entries: Vec<(u32, u32, Q64)>,
}

impl ClassTable {
    pub fn with_capacity(rows: usize) -> Self {
        let mut offsets = Vec::with_capacity(rows + 1);
        offsets.push(0);
        ClassTable { offsets, entries: Vec::new() }
    }

    pub fn push_row(&mut self, row: Vec<(u32, u32, Q64)>) {
        self.entries.extend(row);
        self.offsets.push(self.entries.len());
    }

    pub fn rows(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn row(&self, a: usize) -> &[(u32, u32, Q64)] {
        &self.entries[self.offsets[a]..self.offsets[a + 1]]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn cache_file_name(g: Grading) -> String {
    format!("sc-n{}-d{}-{}.bin", g.n(), g.step(), NORMALIZATION)
}

fn put(buf: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            buf.push(byte);
            return;
        }
        buf.push(byte | 0x80);
    }
}

fn zigzag(v: i64) -> u64 {
    ((v << 1) ^ (v >> 63)) as u64
}

fn unzigzag(v: u64) -> i64 {
    ((v >> 1) as i64) ^ -((v & 1) as i64)
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn get(&mut self) -> Result<u64> {
        let mut v: u64 = 0;
        let mut shift = 0;
        loop {
            let &b = self.buf.get(self.pos).ok_or_else(|| Error::Cache("truncated varint".into()))?;
            self.pos += 1;
            if shift >= 64 {
                return Err(Error::Cache("varint overflow".into()));
            }
            v |= ((b & 0x7f) as u64) << shift;
            if b & 0x80 == 0 {
                return Ok(v);
            }
            shift += 7;
        }
    }

    fn bytes(&mut self, len: usize) -> Result<&[u8]> {
        let end = self.pos.checked_add(len).filter(|&e| e <= self.buf.len());
        let end = end.ok_or_else(|| Error::Cache("truncated string".into()))?;
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }
}

/// Flat record form shared by both encodings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheContents {
    pub format_version: u64,
    pub n: usize,
    pub d: usize,
    pub normalization: String,
    /// Grade pairs (left degree, right degree) whose constants are complete.
    pub classes: Vec<(usize, usize)>,
    pub constants: Vec<(u32, u32, u32, i64, i64)>,
}

impl CacheContents {
    pub fn encode(&self) -> Vec<u8> {
        let mut buf = MAGIC.to_vec();
        put(&mut buf, self.format_version);
        put(&mut buf, self.n as u64);
        put(&mut buf, self.d as u64);
        put(&mut buf, self.normalization.len() as u64);
        buf.extend_from_slice(self.normalization.as_bytes());
        put(&mut buf, self.classes.len() as u64);
        for &(a, b) in &self.classes {
            put(&mut buf, a as u64);
            put(&mut buf, b as u64);
        }
        put(&mut buf, self.constants.len() as u64);
        for &(i, j, k, num, den) in &self.constants {
            put(&mut buf, i as u64);
            put(&mut buf, j as u64);
            put(&mut buf, k as u64);
            put(&mut buf, zigzag(num));
            put(&mut buf, den as u64);
        }
        let h = fnv1a(&buf);
        buf.extend_from_slice(&h.to_le_bytes());
        buf
    }

    pub fn decode(bytes: &[u8]) -> Result<Self> {
        if bytes.first() == Some(&b'{') {
            return Ok(serde_json::from_slice(bytes)?);
        }
        if bytes.len() < MAGIC.len() + 8 || &bytes[..MAGIC.len()] != MAGIC {
            return Err(Error::Cache("bad magic".into()));
        }
        let (body, tail) = bytes.split_at(bytes.len() - 8);
        if fnv1a(body).to_le_bytes() != tail {
            return Err(Error::Cache("checksum mismatch".into()));
        }
        let mut r = Reader { buf: body, pos: MAGIC.len() };
        let format_version = r.get()?;
        if format_version != FORMAT_VERSION {
            return Err(Error::Cache(format!("unsupported format version {format_version}")));
        }
        let n = r.get()? as usize;
        let d = r.get()? as usize;
        let len = r.get()? as usize;
        let normalization = String::from_utf8(r.bytes(len)?.to_vec())
            .map_err(|_| Error::Cache("normalization tag is not UTF-8".into()))?;
        let nc = r.get()? as usize;
        let mut classes = Vec::with_capacity(nc.min(1024));
        for _ in 0..nc {
            classes.push((r.get()? as usize, r.get()? as usize));
        }
        let count = r.get()? as usize;
        let mut constants = Vec::with_capacity(count.min(1 << 24));
        for _ in 0..count {
            let (i, j, k) = (r.get()?, r.get()?, r.get()?);
            let num = unzigzag(r.get()?);
            let den = r.get()? as i64;
            if den <= 0 || i > u32::MAX as u64 || j > u32::MAX as u64 || k > u32::MAX as u64 {
                return Err(Error::Cache("malformed record".into()));
            }
            constants.push((i as u32, j as u32, k as u32, num, den));
        }
        if r.pos != body.len() {
            return Err(Error::Cache("trailing bytes".into()));
        }
        Ok(CacheContents { format_version, n, d, normalization, classes, constants })
    }
}

fn contents_of(alg: &Algebra) -> Result<CacheContents> {
    let g = alg.grading().ok_or_else(|| Error::Cache("only full algebras are cached".into()))?;
    let layout = alg.layout();
    let mut classes = Vec::new();
    let mut constants = Vec::new();
    for ((l, r), table) in alg.class_snapshot() {
        classes.push((layout.labels()[l], layout.labels()[r]));
        let (lo, ro) = (layout.offset(l), layout.offset(r));
        for a in 0..table.rows() {
            for &(j, k, q) in table.row(a) {
                constants.push(((lo + a) as u32, ro as u32 + j, k, *q.numer(), *q.denom()));
            }
        }
    }
    Ok(CacheContents {
        format_version: FORMAT_VERSION,
        n: g.n(),
        d: g.step(),
        normalization: NORMALIZATION.to_string(),
        classes,
        constants,
    })
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp: PathBuf = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Writes all computed classes of `alg` to `path` (binary).
pub fn save(path: &Path, alg: &Algebra) -> Result<()> {
    write_atomic(path, &contents_of(alg)?.encode())
}

/// Writes the JSON variant.
pub fn save_json(path: &Path, alg: &Algebra) -> Result<()> {
    write_atomic(path, &serde_json::to_vec(&contents_of(alg)?)?)
}

pub fn read(path: &Path) -> Result<CacheContents> {
    CacheContents::decode(&fs::read(path)?)
}

/// Reads a cache file and regroups it into class tables of `alg`.
pub fn load(path: &Path, alg: &Algebra) -> Result<HashMap<(usize, usize), Arc<ClassTable>>> {
    let c = read(path)?;
    let g = alg.grading().ok_or_else(|| Error::Cache("only full algebras are cached".into()))?;
    if (c.n, c.d) != (g.n(), g.step()) || c.normalization != NORMALIZATION {
        return Err(Error::Cache(format!(
            "cache is for n={} d={} {}, wanted {g} {NORMALIZATION}",
            c.n, c.d, c.normalization
        )));
    }
    let layout = alg.layout();
    let block = |deg: usize| alg.block_of_degree(deg).ok_or_else(|| Error::Cache(format!("unknown grade {deg}")));
    let mut grouped: BTreeMap<(usize, usize), BTreeMap<usize, Vec<(u32, u32, Q64)>>> = BTreeMap::new();
    for &(a, b) in &c.classes {
        grouped.insert((block(a)?, block(b)?), BTreeMap::new());
    }
    for &(i, j, k, num, den) in &c.constants {
        if i as usize >= alg.dim() || j as usize >= alg.dim() || k as usize >= alg.dim() {
            return Err(Error::Cache("index beyond the algebra dimension".into()));
        }
        let (l, a) = layout.locate(i as usize);
        let (r, b) = layout.locate(j as usize);
        let rows = grouped.get_mut(&(l, r)).ok_or_else(|| Error::Cache("record outside listed classes".into()))?;
        rows.entry(a).or_default().push((b as u32, k, Q64::new(num, den)));
    }
    let mut out = HashMap::new();
    for ((l, r), mut rows) in grouped {
        let mut table = ClassTable::with_capacity(layout.size(l));
        for a in 0..layout.size(l) {
            table.push_row(rows.remove(&a).unwrap_or_default());
        }
        out.insert((l, r), Arc::new(table));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub classes: usize,
    pub records: usize,
    pub pairs_checked: usize,
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Recomputes a random `fraction` of the basis pairs covered by the cache at `path`.
pub fn verify(path: &Path, alg: &Algebra, fraction: f64, seed: u64) -> Result<VerifyReport> {
    let c = read(path)?;
    let classes = load(path, alg)?;
    let layout = alg.layout();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for &(l, r) in classes.keys() {
        for a in 0..layout.size(l) {
            for b in 0..layout.size(r) {
                pairs.push((layout.offset(l) + a, layout.offset(r) + b));
            }
        }
    }
    pairs.sort_unstable();
    let take = ((pairs.len() as f64 * fraction).ceil() as usize).min(pairs.len());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<_> = pairs.choose_multiple(&mut rng, take).copied().collect();
    let mut mismatches = Vec::new();
    for &(i, j) in &sample {
        let (l, a) = layout.locate(i);
        let (r, b) = layout.locate(j);
        let mut stored: Vec<(usize, Q64)> = classes[&(l, r)]
            .row(a)
            .iter()
            .filter(|e| e.0 as usize == b)
            .map(|&(_, k, q)| (k as usize, q))
            .collect();
        let (x, y) = (alg.basis()[i], alg.basis()[j]);
        let mut fresh: Vec<(usize, Q64)> = bracket_basis(alg.n(), x, y)
            .into_iter()
            .map(|(k, q)| (alg.index_of(&k).unwrap_or(usize::MAX), q))
            .collect();
        stored.sort_unstable();
        fresh.sort_unstable();
        if stored != fresh {
            mismatches.push(format!("[{x}, {y}]"));
        }
    }
    Ok(VerifyReport { classes: classes.len(), records: c.constants.len(), pairs_checked: sample.len(), mismatches })
}
