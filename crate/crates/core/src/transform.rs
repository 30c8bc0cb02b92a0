//! Transformations of a finite state set `{0, .., n-1}`.
//!
//! A [`Transformation`] stores its image list `[i_0, i_1, .., i_{n-1}]`.
//! Composition is diagrammatic: `first.then(&second)` applies `first`
//! and then `second`, so the transformation of a word is the left-to-right
//! fold of its letters.

use std::fmt;

use crate::error::{Error, Result};

/// A total map of `{0, .., n-1}` into itself.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Box<[u32]>,
}

fn check_state(state: usize, n: usize) -> Result<()> {
    if state < n {
        Ok(())
    } else {
        Err(Error::StateOutOfRange { state, n })
    }
}

impl Transformation {
    /// Builds a transformation from its image list, checking every entry.
    pub fn new<I>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        for &i in &images {
            check_state(i, n)?;
        }
        Ok(Self::from_unchecked(images.into_iter().map(|i| i as u32)))
    }

    pub(crate) fn from_unchecked<I: IntoIterator<Item = u32>>(images: I) -> Self {
        Self {
            images: images.into_iter().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_unchecked(0..n as u32)
    }

    /// The constant map `Q choose i`.
    pub fn constant(n: usize, i: usize) -> Result<Self> {
        check_state(i, n)?;
        Ok(Self::from_unchecked(std::iter::repeat_n(i as u32, n)))
    }

    /// The singular map `i choose j`: sends `i` to `j`, fixes everything else.
    pub fn singular(n: usize, i: usize, j: usize) -> Result<Self> {
        check_state(i, n)?;
        check_state(j, n)?;
        let mut t = Self::identity(n);
        t.images[i] = j as u32;
        Ok(t)
    }

    /// The transposition `(i, j)`; `(i, i)` is the identity.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        check_state(i, n)?;
        check_state(j, n)?;
        let mut t = Self::identity(n);
        t.images.swap(i, j);
        Ok(t)
    }

    /// The cycle `(lo, lo+1, .., hi)`: `k -> k+1` for `lo <= k < hi`, `hi -> lo`.
    pub fn cycle(n: usize, lo: usize, hi: usize) -> Result<Self> {
        if lo > hi || hi >= n {
            return Err(Error::InvalidRange { lo, hi, n });
        }
        let mut t = Self::identity(n);
        for k in lo..hi {
            t.images[k] = (k + 1) as u32;
        }
        t.images[hi] = lo as u32;
        Ok(t)
    }

    /// Number of states of the underlying set.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, state: usize) -> usize {
        self.images[state] as usize
    }

    /// `self` followed by `second`; the result maps `k` to `second(self(k))`.
    pub fn then(&self, second: &Transformation) -> Result<Transformation> {
        if self.n() != second.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: second.n(),
            });
        }
        Ok(self.then_unchecked(second))
    }

    #[inline]
    pub(crate) fn then_unchecked(&self, second: &Transformation) -> Transformation {
        Self::from_unchecked(self.images.iter().map(|&i| second.images[i as usize]))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k == i as usize)
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.n()];
        for &i in self.images.iter() {
            if std::mem::replace(&mut seen[i as usize], true) {
                return false;
            }
        }
        true
    }

    /// Inverse of a permutation, `None` for singular transformations.
    pub fn inverse(&self) -> Option<Transformation> {
        if !self.is_permutation() {
            return None;
        }
        let mut inv = vec![0u32; self.n()];
        for (k, &i) in self.images.iter().enumerate() {
            inv[i as usize] = k as u32;
        }
        Some(Self::from_unchecked(inv))
    }

    /// Size of the image set.
    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.n()];
        self.images
            .iter()
            .filter(|&&i| !std::mem::replace(&mut seen[i as usize], true))
            .count()
    }
}

/// Composes two transformations in word order: `compose(u, v)` is the
/// transformation of the word `uv`.
pub fn compose(first: &Transformation, second: &Transformation) -> Result<Transformation> {
    first.then(second)
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Transformation {
    type Err = Error;

    /// Parses the bracket notation `[1,2,0]`; brackets and spaces are optional.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = body
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                p.trim().parse::<usize>().map_err(|e| Error::Parse {
                    path: s.to_string(),
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Transformation::new(images)
    }
}
