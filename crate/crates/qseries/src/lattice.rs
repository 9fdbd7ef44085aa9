//! Integer exponent lattices with a linear grading.

use crate::SeriesError;

/// A named integer exponent lattice with one nonnegative grading weight per
/// basis element. The grade of an exponent vector `v` is `sum_i w_i * v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentLattice {
    labels: Vec<String>,
    weights: Vec<u32>,
}

impl ExponentLattice {
    /// Builds a lattice from basis labels and grading weights.
    ///
    /// # Errors
    /// Fails when the two lists have different lengths or are empty.
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        weights: impl IntoIterator<Item = u32>,
    ) -> Result<Self, SeriesError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let weights: Vec<u32> = weights.into_iter().collect();
        if labels.is_empty() || labels.len() != weights.len() {
            return Err(SeriesError::Malformed(format!(
                "{} labels vs {} weights",
                labels.len(),
                weights.len()
            )));
        }
        Ok(Self { labels, weights })
    }

    /// Lattice with all grading weights equal to one.
    pub fn unit_weights<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, SeriesError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        Self::new(labels, vec![1u32; n])
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Linear grade of an exponent vector.
    ///
    /// # Errors
    /// Fails when the vector length does not equal the lattice rank.
    pub fn grade(&self, v: &[i64]) -> Result<i64, SeriesError> {
        if v.len() != self.rank() {
            return Err(SeriesError::RankMismatch {
                got: v.len(),
                want: self.rank(),
            });
        }
        Ok(v.iter()
            .zip(&self.weights)
            .map(|(e, w)| e * i64::from(*w))
            .sum())
    }
}
