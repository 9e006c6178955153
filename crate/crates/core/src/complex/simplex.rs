use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense, 0-based vertex index within one complex.
pub type VertexId = usize;

/// A nonempty simplex stored as a strictly increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Sorts the vertices; rejects empty input and repeated vertices.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidSimplex("a simplex needs at least one vertex".into()));
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSimplex(format!("vertex {} repeated", w[0])));
        }
        Ok(Self(vertices))
    }

    /// Caller guarantees strictly increasing, nonempty input.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    /// Vertex list with the vertex at `pos` removed (the face opposite to it).
    pub fn omit(&self, pos: usize) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.0.len() - 1);
        out.extend_from_slice(&self.0[..pos]);
        out.extend_from_slice(&self.0[pos + 1..]);
        out
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

impl TryFrom<Vec<VertexId>> for Simplex {
    type Error = Error;

    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<VertexId> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Sign of the permutation that sorts `seq`; 0 when an entry repeats.
pub fn permutation_sign(seq: &[VertexId]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Calls `visit` on every `size`-subset of `items`, in lexicographic order.
pub(crate) fn for_each_subset<F: FnMut(&[VertexId])>(items: &[VertexId], size: usize, mut visit: F) {
    if size > items.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut buf: Vec<VertexId> = Vec::with_capacity(size);
    loop {
        buf.clear();
        buf.extend(idx.iter().map(|&i| items[i]));
        visit(&buf);
        let n = items.len();
        let mut i = size;
        while i > 0 && idx[i - 1] == n - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_rejects_duplicates() {
        assert_eq!(Simplex::new(vec![3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
        assert!(Simplex::new(vec![1, 1]).is_err());
        assert!(Simplex::new(vec![]).is_err());
    }

    #[test]
    fn parity() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[2, 0, 1]), 1);
        assert_eq!(permutation_sign(&[2, 2, 1]), 0);
        assert_eq!(permutation_sign(&[]), 1);
    }

    #[test]
    fn subsets_in_lex_order() {
        let mut out = Vec::new();
        for_each_subset(&[1, 4, 6, 9], 2, |s| out.push(s.to_vec()));
        assert_eq!(
            out,
            vec![vec![1, 4], vec![1, 6], vec![1, 9], vec![4, 6], vec![4, 9], vec![6, 9]]
        );
        let mut count = 0;
        for_each_subset(&[0, 1, 2], 0, |s| {
            assert!(s.is_empty());
            count += 1
        });
        assert_eq!(count, 1);
        let mut all = 0;
        for_each_subset(&[0, 1, 2], 3, |_| all += 1);
        assert_eq!(all, 1);
        let mut none = 0;
        for_each_subset(&[0, 1], 3, |_| none += 1);
        assert_eq!(none, 0);
    }
}
