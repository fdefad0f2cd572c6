//! Versioned text serialization of [`Irrep`] and a directory cache.
//!
//! ```text
//! nilcent-irrep 1
//! sign-convention extraspecial-v1
//! type A2
//! highest 1,1
//! dimension 8
//! basis
//! 1,1 -
//! -1,2 0
//! ...
//! matrix -1,-1 <nnz>
//! <row> <col> <p/q>
//! ...
//! gram 1,1 1
//! 1/1
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use super::{build_irrep, Irrep};
use crate::linalg::{format_q, parse_q, SparseMatrix, Q};
use crate::rootsys::{join_ints, RootSystem, Weight, SIGN_CONVENTION};
use crate::{Error, Result};

pub const CACHE_VERSION: u32 = 1;

/// File name for `V_lambda` of `rs`.
pub fn cache_key(rs: &RootSystem, lambda: &[i64]) -> String {
    format!(
        "{}_{}_{}_v{}.irrep",
        rs.name(),
        join_ints(lambda, "-"),
        SIGN_CONVENTION,
        CACHE_VERSION
    )
}

pub fn write_irrep(rs: &RootSystem, v: &Irrep) -> String {
    let mut s = String::new();
    let mut line = |l: String| {
        s.push_str(&l);
        s.push('\n');
    };
    line(format!("nilcent-irrep {CACHE_VERSION}"));
    line(format!("sign-convention {SIGN_CONVENTION}"));
    line(format!("type {}", rs.name()));
    line(format!("highest {}", join_ints(v.highest(), ",")));
    line(format!("dimension {}", v.dim()));
    line("basis".into());
    for i in 0..v.dim() {
        let w = v.word_of(i);
        let word = if w.is_empty() {
            "-".to_string()
        } else {
            w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        line(format!("{} {}", join_ints(v.weight_of(i), ","), word));
    }
    for (a, m) in v.matrices().iter().enumerate() {
        let t = m.triplets();
        line(format!("matrix {} {}", rs.letter(a).label, t.len()));
        for (r, c, x) in t {
            line(format!("{r} {c} {}", format_q(&x)));
        }
    }
    for (mu, g) in v.grams() {
        line(format!("gram {} {}", join_ints(mu, ","), g.len()));
        for row in g {
            line(row.iter().map(format_q).collect::<Vec<_>>().join(" "));
        }
    }
    s
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer list {s:?}"))))
        .collect()
}

pub fn read_irrep(rs: &RootSystem, text: &str) -> Result<Irrep> {
    let mut lines = text.lines();
    let mut next = |what: &str| -> Result<&str> {
        lines.next().ok_or_else(|| Error::Cache(format!("truncated before {what}")))
    };
    let expect = |l: &str, key: &str| -> Result<String> {
        l.strip_prefix(key)
            .map(|r| r.trim().to_string())
            .ok_or_else(|| Error::Cache(format!("expected {key:?}, found {l:?}")))
    };
    let version = expect(next("header")?, "nilcent-irrep")?;
    if version != CACHE_VERSION.to_string() {
        return Err(Error::Cache(format!("unsupported version {version}")));
    }
    let conv = expect(next("sign convention")?, "sign-convention")?;
    if conv != SIGN_CONVENTION {
        return Err(Error::Cache(format!("sign convention {conv} does not match {SIGN_CONVENTION}")));
    }
    let ty = expect(next("type")?, "type")?;
    if ty != rs.name() {
        return Err(Error::Cache(format!("file is for {ty}, expected {}", rs.name())));
    }
    let highest = parse_ints(&expect(next("highest")?, "highest")?)?;
    let dim: usize = expect(next("dimension")?, "dimension")?
        .parse()
        .map_err(|_| Error::Cache("bad dimension".into()))?;
    expect(next("basis")?, "basis")?;
    let mut weights = Vec::with_capacity(dim);
    let mut words = Vec::with_capacity(dim);
    let mut spaces: BTreeMap<Vec<i64>, (usize, usize)> = BTreeMap::new();
    for i in 0..dim {
        let l = next("basis line")?;
        let (w, word) = l.split_once(' ').ok_or_else(|| Error::Cache(format!("bad basis line {l:?}")))?;
        let w = parse_ints(w)?;
        let word: Vec<usize> = if word == "-" {
            Vec::new()
        } else {
            parse_ints(word)?.into_iter().map(|x| x as usize).collect()
        };
        let e = spaces.entry(w.clone()).or_insert((i, 0));
        if e.0 + e.1 != i {
            return Err(Error::Cache("weight space is not contiguous".into()));
        }
        e.1 += 1;
        weights.push(w);
        words.push(word);
    }
    let mut mats = Vec::with_capacity(rs.dim());
    for a in 0..rs.dim() {
        let l = next("matrix")?;
        let rest = expect(l, "matrix")?;
        let (label, nnz) = rest
            .rsplit_once(' ')
            .ok_or_else(|| Error::Cache(format!("bad matrix header {l:?}")))?;
        if label != rs.letter(a).label {
            return Err(Error::Cache(format!("matrix {label} out of order")));
        }
        let nnz: usize = nnz.parse().map_err(|_| Error::Cache("bad nnz".into()))?;
        let mut m = SparseMatrix::zeros(dim, dim);
        for _ in 0..nnz {
            let l = next("matrix entry")?;
            let parts: Vec<&str> = l.split(' ').collect();
            if parts.len() != 3 {
                return Err(Error::Cache(format!("bad entry {l:?}")));
            }
            let r: usize = parts[0].parse().map_err(|_| Error::Cache("bad row".into()))?;
            let c: usize = parts[1].parse().map_err(|_| Error::Cache("bad column".into()))?;
            if r >= dim || c >= dim {
                return Err(Error::Cache(format!("entry ({r},{c}) out of range")));
            }
            m.add_entry(r, c, parse_q(parts[2])?);
        }
        mats.push(m);
    }
    let mut grams = BTreeMap::new();
    for _ in 0..spaces.len() {
        let rest = expect(next("gram")?, "gram")?;
        let (mu, n) = rest.split_once(' ').ok_or_else(|| Error::Cache("bad gram header".into()))?;
        let n: usize = n.parse().map_err(|_| Error::Cache("bad gram size".into()))?;
        let mut g: Vec<Vec<Q>> = Vec::with_capacity(n);
        for _ in 0..n {
            let row = next("gram row")?
                .split(' ')
                .map(parse_q)
                .collect::<Result<Vec<Q>>>()?;
            if row.len() != n {
                return Err(Error::Cache("bad gram row".into()));
            }
            g.push(row);
        }
        grams.insert(parse_ints(mu)?, g);
    }
    Ok(Irrep {
        family: rs.datum().family(),
        rank: rs.rank(),
        highest,
        weights,
        words,
        spaces,
        mats,
        grams,
    })
}

/// Writes through a temporary file in the same directory and renames it,
/// so concurrent writers never expose a partial file.
pub fn store_irrep(dir: &Path, rs: &RootSystem, v: &Irrep) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    let path = dir.join(cache_key(rs, v.highest()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::Cache(e.to_string()))?;
    tmp.write_all(write_irrep(rs, v).as_bytes())
        .map_err(|e| Error::Cache(e.to_string()))?;
    tmp.persist(&path).map_err(|e| Error::Cache(e.to_string()))?;
    Ok(path)
}

/// Loads `V_lambda` from `dir`, building and storing it on a miss. The flag
/// reports a cache hit.
pub fn load_irrep(dir: &Path, rs: &RootSystem, lambda: &Weight, size_cap: usize) -> Result<(Irrep, bool)> {
    let l = rs.dominant_integral(lambda)?;
    let path = dir.join(cache_key(rs, &l));
    if let Ok(text) = fs::read_to_string(&path) {
        match read_irrep(rs, &text) {
            Ok(v) if v.dim() <= size_cap => {
                log::info!("cache hit {}", path.display());
                return Ok((v, true));
            }
            Ok(v) => {
                return Err(Error::SizeCap {
                    dim: v.dim() as u64,
                    cap: size_cap,
                })
            }
            Err(e) => log::warn!("ignoring unreadable cache file {}: {e}", path.display()),
        }
    }
    let v = build_irrep(rs, lambda, size_cap)?;
    store_irrep(dir, rs, &v)?;
    Ok((v, false))
}
