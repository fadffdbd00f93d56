//! JSON helpers: integers are written as JSON numbers when they fit in
//! 64 bits and as decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{SerializeSeq, Serializer};

use crate::exactalg::{IntMatrix, IntPoly};

fn int<S: SerializeSeq>(seq: &mut S, v: &BigInt) -> Result<(), S::Error> {
    match v.to_i64() {
        Some(i) => seq.serialize_element(&i),
        None => seq.serialize_element(&v.to_string()),
    }
}

struct Row<'a>(&'a [BigInt]);

impl serde::Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            int(&mut seq, v)?;
        }
        seq.end()
    }
}

pub fn poly<S: Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
    Row(p.coeffs()).serialize(s)
}

pub fn matrix<S: Serializer>(m: &IntMatrix, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.dim()))?;
    for r in m.rows() {
        seq.serialize_element(&Row(r))?;
    }
    seq.end()
}

use serde::Serialize;
