use std::fmt;

use serde::{Deserialize, Serialize};

use super::ExactValue;

/// An eigenvalue, exact where a closed form is known.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectralValue {
    Exact(ExactValue),
    Float(f64),
}

impl SpectralValue {
    pub fn approx(&self) -> f64 {
        match self {
            SpectralValue::Exact(v) => v.to_f64(),
            SpectralValue::Float(x) => *x,
        }
    }
}

impl From<ExactValue> for SpectralValue {
    fn from(v: ExactValue) -> Self {
        SpectralValue::Exact(v)
    }
}

impl From<f64> for SpectralValue {
    fn from(x: f64) -> Self {
        SpectralValue::Float(x)
    }
}

impl fmt::Display for SpectralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralValue::Exact(v) => write!(f, "{v}"),
            SpectralValue::Float(x) => write!(f, "{x:.12}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: SpectralValue,
    pub mult: usize,
}

/// Eigenvalue multiset, sorted ascending by numeric value.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Builds a spectrum from `(value, multiplicity)` pairs. Entries with
    /// zero multiplicity are dropped; equal exact values are merged.
    pub fn from_entries<V: Into<SpectralValue>>(pairs: impl IntoIterator<Item = (V, usize)>) -> Self {
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        for (value, mult) in pairs {
            if mult == 0 {
                continue;
            }
            let value = value.into();
            match entries.iter_mut().find(|e| matches!((e.value, value), (SpectralValue::Exact(a), SpectralValue::Exact(b)) if a == b)) {
                Some(e) => e.mult += mult,
                None => entries.push(SpectrumEntry { value, mult }),
            }
        }
        entries.sort_by(|a, b| a.value.approx().total_cmp(&b.value.approx()));
        Spectrum { entries }
    }

    /// Groups floats, merging sorted neighbours at most `window` apart.
    pub fn from_floats(values: &[f64], window: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mut entries = Vec::new();
        let mut start = 0;
        for i in 1..=sorted.len() {
            if i == sorted.len() || sorted[i] - sorted[i - 1] > window {
                let group = &sorted[start..i];
                let mean = group.iter().sum::<f64>() / group.len() as f64;
                entries.push(SpectrumEntry { value: SpectralValue::Float(mean), mult: group.len() });
                start = i;
            }
        }
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Total multiplicity.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every eigenvalue repeated by multiplicity, ascending.
    pub fn to_floats(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat(e.value.approx()).take(e.mult))
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }

    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|e| e.value.approx() * e.mult as f64).sum()
    }

    pub fn min(&self) -> Option<f64> {
        self.entries.first().map(|e| e.value.approx())
    }

    pub fn max(&self) -> Option<f64> {
        self.entries.last().map(|e| e.value.approx())
    }

    /// Multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        Spectrum::from_entries(
            self.entries.iter().chain(&other.entries).map(|e| (e.value, e.mult)),
        )
    }

    /// Largest elementwise gap between the sorted expansions, or infinity
    /// when the sizes differ.
    pub fn distance(&self, other: &Spectrum) -> f64 {
        multiset_distance(&self.to_floats(), &other.to_floats())
    }

    /// Product of all eigenvalues when every entry is exact and the
    /// products stay representable.
    pub fn exact_product(&self) -> Option<ExactValue> {
        let mut acc = ExactValue::int(1);
        for e in &self.entries {
            let SpectralValue::Exact(v) = e.value else { return None };
            for _ in 0..e.mult {
                acc = acc.checked_mul(&v)?;
            }
        }
        Some(acc)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| if e.mult == 1 { e.value.to_string() } else { format!("{} ×{}", e.value, e.mult) })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Max elementwise distance between two multisets of reals (sorted
/// internally); infinity on a size mismatch.
pub fn multiset_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    x.iter().zip(&y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_close_floats() {
        let s = Spectrum::from_floats(&[1.0, -2.0, -2.0 + 1e-14, 1.0 + 1e-13, 5.0], 1e-11);
        assert_eq!(s.entries().len(), 3);
        assert_eq!(s.entries()[0].mult, 2);
        assert_eq!(s.entries()[1].mult, 2);
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn exact_entries_merge_and_sort() {
        let s = Spectrum::from_entries([(ExactValue::int(2), 1), (ExactValue::int(-2), 2), (ExactValue::int(2), 1)]);
        assert_eq!(s.entries().len(), 2);
        assert_eq!(s.to_floats(), vec![-2.0, -2.0, 2.0, 2.0]);
        assert_eq!(s.trace(), 0.0);
        assert_eq!(s.exact_product(), Some(ExactValue::int(16)));
    }

    #[test]
    fn json_shape() {
        let s = Spectrum::from_entries([(SpectralValue::Exact(ExactValue::int(-2)), 3), (SpectralValue::Float(0.5), 1)]);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"value": {"exact": {"a": -2, "b": 0, "r": 0, "c": 1}}, "mult": 3},
                {"value": {"float": 0.5}, "mult": 1}
            ])
        );
    }

    #[test]
    fn distances() {
        assert_eq!(multiset_distance(&[1.0, 2.0], &[2.0, 1.0]), 0.0);
        assert_eq!(multiset_distance(&[1.0], &[1.0, 2.0]), f64::INFINITY);
        assert!((multiset_distance(&[1.0, 2.0], &[1.5, 2.0]) - 0.5).abs() < 1e-15);
    }
}
