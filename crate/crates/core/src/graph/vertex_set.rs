use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_order, low_mask, GraphError};

/// A subset of `{0, .., n-1}` backed by a single `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    n: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        Self {
            bits: low_mask(n),
            n,
        }
    }

    /// Bits at or above `n` are rejected.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self, GraphError> {
        check_order(n)?;
        if bits & !low_mask(n) != 0 {
            let v = 63 - (bits & !low_mask(n)).leading_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        Ok(Self { bits, n })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !low_mask(n), 0);
        Self { bits, n }
    }

    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        check_order(n)?;
        let mut bits = 0u64;
        for v in vertices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            bits |= 1 << v;
        }
        Ok(Self { bits, n })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Ambient vertex count.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits >> v & 1 == 1
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: !self.bits & low_mask(self.n),
            n: self.n,
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize, Deserialize)]
struct VertexSetRepr {
    n: usize,
    vertices: Vec<usize>,
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VertexSetRepr {
            n: self.n,
            vertices: self.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = VertexSetRepr::deserialize(deserializer)?;
        VertexSet::from_vertices(repr.n, repr.vertices).map_err(serde::de::Error::custom)
    }
}
