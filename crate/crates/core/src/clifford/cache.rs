//! Binary on-disk cache of monomial product tables.
//!
//! Layout (little endian): magic `GKCL`, version `u32`, 32-byte digest,
//! record count `u64`, then per record `a: u32, b: u32, n: u32` followed by
//! `n` terms `mask: u32, numer, denom`, each integer as a `u32` length and
//! that many signed bytes.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::blades::Mask;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"GKCL";
const VERSION: u32 = 1;

type Entry = ((Mask, Mask), Vec<(Mask, BigRational)>);

fn io_err(e: std::io::Error) -> Error {
    Error::Cache(e.to_string())
}

fn put_int(out: &mut Vec<u8>, n: &BigInt) {
    let bytes = n.to_signed_bytes_le();
    out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
    out.extend_from_slice(&bytes);
}

pub fn save(path: &Path, digest: &[u8; 32], entries: &[((Mask, Mask), &Vec<(Mask, BigRational)>)]) -> Result<()> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(digest);
    out.extend_from_slice(&(entries.len() as u64).to_le_bytes());
    for ((a, b), terms) in entries {
        out.extend_from_slice(&a.to_le_bytes());
        out.extend_from_slice(&b.to_le_bytes());
        out.extend_from_slice(&(terms.len() as u32).to_le_bytes());
        for (m, c) in terms.iter() {
            out.extend_from_slice(&m.to_le_bytes());
            put_int(&mut out, c.numer());
            put_int(&mut out, c.denom());
        }
    }
    let mut file = fs::File::create(path).map_err(io_err)?;
    file.write_all(&out).map_err(io_err)
}

struct Reader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn take(&mut self, n: usize) -> Result<&[u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.data.len()).ok_or_else(|| Error::Cache("truncated cache file".into()))?;
        let s = &self.data[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }

    fn int(&mut self) -> Result<BigInt> {
        let n = self.u32()? as usize;
        Ok(BigInt::from_signed_bytes_le(self.take(n)?))
    }
}

/// Reads the table at `path`; `None` if the file is absent or belongs to a
/// different algebra.
pub fn load(path: &Path, digest: &[u8; 32]) -> Result<Option<Vec<Entry>>> {
    let mut data = Vec::new();
    match fs::File::open(path) {
        Ok(mut f) => f.read_to_end(&mut data).map_err(io_err)?,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io_err(e)),
    };
    let mut r = Reader { data: &data, pos: 0 };
    if r.take(4)? != MAGIC || r.u32()? != VERSION {
        return Err(Error::Cache("not a product-table cache".into()));
    }
    if r.take(32)? != digest {
        return Ok(None);
    }
    let count = r.u64()?;
    let mut entries = Vec::new();
    for _ in 0..count {
        let a = r.u32()?;
        let b = r.u32()?;
        let n = r.u32()?;
        let mut terms = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let m = r.u32()?;
            let numer = r.int()?;
            let denom = r.int()?;
            if denom == BigInt::from(0) {
                return Err(Error::Cache("zero denominator in cache".into()));
            }
            terms.push((m, BigRational::new(numer, denom)));
        }
        entries.push(((a, b), terms));
    }
    Ok(Some(entries))
}
