//! Projective points and 3x3 projective linear transformations.
//!
//! Transformations are stored as given; PGL3 equality, hashing and
//! deduplication go through [`ProjectiveTransformation::canonical`],
//! which rescales so the first nonzero entry in row-major order is 1.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::nf::{embed, NFElement, NumberField};

/// Point of P^2 over a number field, normalized so the first nonzero
/// coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    field: NumberField,
    coords: [NFElement; 3],
}

impl ProjPoint {
    pub fn new(field: NumberField, coords: [NFElement; 3]) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::Parse("projective point (0:0:0)".into()))?;
        let inv = lead.inv()?;
        let coords = [
            coords[0].mul(&inv),
            coords[1].mul(&inv),
            coords[2].mul(&inv),
        ];
        Ok(ProjPoint { field, coords })
    }

    pub fn from_ints(ns: [i64; 3]) -> Result<Self> {
        let q = NumberField::q();
        let coords = [q.from_int(ns[0]), q.from_int(ns[1]), q.from_int(ns[2])];
        Self::new(q, coords)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[NFElement; 3] {
        &self.coords
    }

    pub fn coerce(&self, target: &NumberField) -> Result<Self> {
        let mut coords = Vec::with_capacity(3);
        for c in &self.coords {
            coords.push(embed(c, target).ok_or_else(|| {
                Error::FieldMismatch(self.field.label().into(), target.label().into())
            })?);
        }
        Self::new(
            target.clone(),
            [coords[0].clone(), coords[1].clone(), coords[2].clone()],
        )
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// Invertible 3x3 matrix over a number field, seen modulo scalars.
#[derive(Debug, Clone)]
pub struct ProjectiveTransformation {
    field: NumberField,
    entries: [[NFElement; 3]; 3],
}

impl ProjectiveTransformation {
    pub fn new(field: NumberField, entries: [[NFElement; 3]; 3]) -> Result<Self> {
        let t = ProjectiveTransformation { field, entries };
        if t.det().is_zero() {
            return Err(Error::Parse("transformation matrix is singular".into()));
        }
        Ok(t)
    }

    pub fn identity(field: &NumberField) -> Self {
        let z = || field.zero();
        let o = || field.one();
        ProjectiveTransformation {
            field: field.clone(),
            entries: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]],
        }
    }

    /// Diagonal matrix with integer entries.
    pub fn diagonal(field: &NumberField, d: [i64; 3]) -> Self {
        let mut m = Self::identity(field);
        for i in 0..3 {
            m.entries[i][i] = field.from_int(d[i]);
        }
        m
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Result<Self> {
        let q = NumberField::q();
        let entries = rows.map(|r| r.map(|n| q.from_int(n)));
        Self::new(q, entries)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn entries(&self) -> &[[NFElement; 3]; 3] {
        &self.entries
    }

    pub fn det(&self) -> NFElement {
        let e = &self.entries;
        let m = |i: usize, j: usize| &e[i][j];
        let t1 = m(0, 0).mul(&m(1, 1).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 1))));
        let t2 = m(0, 1).mul(&m(1, 0).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 0))));
        let t3 = m(0, 2).mul(&m(1, 0).mul(m(2, 1)).sub(&m(1, 1).mul(m(2, 0))));
        t1.sub(&t2).add(&t3)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch in matrix product");
        let z = self.field.zero();
        let mut entries = [
            [z.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone()],
        ];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = self.field.zero();
                for k in 0..3 {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
                *slot = acc;
            }
        }
        ProjectiveTransformation {
            field: self.field.clone(),
            entries,
        }
    }

    /// Inverse via the adjugate: inv = adj / det.
    pub fn inverse(&self) -> Result<Self> {
        let det_inv = self.det().inv()?;
        let e = &self.entries;
        let m = |i: usize, j: usize| &e[i][j];
        let p = |a: &NFElement, b: &NFElement, c: &NFElement, d: &NFElement| a.mul(b).sub(&c.mul(d));
        let adj = [
            [
                p(m(1, 1), m(2, 2), m(1, 2), m(2, 1)),
                p(m(0, 2), m(2, 1), m(0, 1), m(2, 2)),
                p(m(0, 1), m(1, 2), m(0, 2), m(1, 1)),
            ],
            [
                p(m(1, 2), m(2, 0), m(1, 0), m(2, 2)),
                p(m(0, 0), m(2, 2), m(0, 2), m(2, 0)),
                p(m(0, 2), m(1, 0), m(0, 0), m(1, 2)),
            ],
            [
                p(m(1, 0), m(2, 1), m(1, 1), m(2, 0)),
                p(m(0, 1), m(2, 0), m(0, 0), m(2, 1)),
                p(m(0, 0), m(1, 1), m(0, 1), m(1, 0)),
            ],
        ];
        Ok(ProjectiveTransformation {
            field: self.field.clone(),
            entries: adj.map(|row| row.map(|c| c.mul(&det_inv))),
        })
    }

    pub fn apply(&self, pt: &ProjPoint) -> Result<ProjPoint> {
        let pt = pt.coerce(&self.field)?;
        let mut coords = Vec::with_capacity(3);
        for i in 0..3 {
            let mut acc = self.field.zero();
            for k in 0..3 {
                acc = acc.add(&self.entries[i][k].mul(&pt.coords()[k]));
            }
            coords.push(acc);
        }
        ProjPoint::new(
            self.field.clone(),
            [coords[0].clone(), coords[1].clone(), coords[2].clone()],
        )
    }

    /// `Some(lambda)` iff the matrix equals `lambda * I`.
    pub fn as_scalar(&self) -> Option<NFElement> {
        let d = &self.entries[0][0];
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    if self.entries[i][j] != *d {
                        return None;
                    }
                } else if !self.entries[i][j].is_zero() {
                    return None;
                }
            }
        }
        Some(d.clone())
    }

    /// Rescales so the first nonzero entry in row-major order is 1.
    pub fn canonical(&self) -> Self {
        let lead = self
            .entries
            .iter()
            .flatten()
            .find(|c| !c.is_zero())
            .expect("invertible matrix has a nonzero entry");
        let inv = lead.inv().expect("nonzero");
        ProjectiveTransformation {
            field: self.field.clone(),
            entries: self.entries.clone().map(|row| row.map(|c| c.mul(&inv))),
        }
    }

    /// Least n <= max_order with M^n scalar, if any.
    pub fn order_in_pgl3(&self, max_order: u32) -> Option<u32> {
        let mut acc = self.clone();
        for n in 1..=max_order {
            if acc.as_scalar().is_some() {
                return Some(n);
            }
            acc = acc.mul(self);
        }
        None
    }

    pub fn coerce(&self, target: &NumberField) -> Result<Self> {
        let mut rows = Vec::with_capacity(3);
        for row in &self.entries {
            let mut r = Vec::with_capacity(3);
            for c in row {
                r.push(embed(c, target).ok_or_else(|| {
                    Error::FieldMismatch(self.field.label().into(), target.label().into())
                })?);
            }
            rows.push([r[0].clone(), r[1].clone(), r[2].clone()]);
        }
        Ok(ProjectiveTransformation {
            field: target.clone(),
            entries: [rows[0].clone(), rows[1].clone(), rows[2].clone()],
        })
    }

    /// Row-major element strings, the JSON wire format.
    pub fn to_strings(&self) -> Vec<String> {
        self.entries
            .iter()
            .flatten()
            .map(|c| c.to_string())
            .collect()
    }

    /// Parses a 9-entry row-major list of element strings.
    pub fn from_strings(field: &NumberField, entries: &[String]) -> Result<Self> {
        if entries.len() != 9 {
            return Err(Error::Parse(format!(
                "expected 9 matrix entries, got {}",
                entries.len()
            )));
        }
        let parsed: Vec<NFElement> = entries
            .iter()
            .map(|s| crate::nf::parse_element(field, s))
            .collect::<Result<_>>()?;
        let row = |i: usize| {
            [
                parsed[3 * i].clone(),
                parsed[3 * i + 1].clone(),
                parsed[3 * i + 2].clone(),
            ]
        };
        Self::new(field.clone(), [row(0), row(1), row(2)])
    }
}

impl PartialEq for ProjectiveTransformation {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.canonical().entries == other.canonical().entries
    }
}
impl Eq for ProjectiveTransformation {}

impl Hash for ProjectiveTransformation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let c = self.canonical();
        for e in c.entries.iter().flatten() {
            e.hash(state);
        }
    }
}

impl fmt::Display for ProjectiveTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_normalization() {
        let p = ProjPoint::from_ints([2, 4, 6]).unwrap();
        let q = ProjPoint::from_ints([1, 2, 3]).unwrap();
        assert_eq!(p, q);
        assert!(ProjPoint::from_ints([0, 0, 0]).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = ProjectiveTransformation::from_ints([[1, -1, 1], [1, -1, -1], [0, 2, 0]]).unwrap();
        let id = m.mul(&m.inverse().unwrap());
        assert_eq!(id.as_scalar(), Some(NumberField::q().one()));
    }

    #[test]
    fn orders() {
        let d = ProjectiveTransformation::diagonal(&NumberField::q(), [1, 1, -1]);
        assert_eq!(d.order_in_pgl3(16), Some(2));
        let h = ProjectiveTransformation::from_ints([[0, 1, 0], [0, 0, 1], [1, 0, 0]]).unwrap();
        assert_eq!(h.order_in_pgl3(16), Some(3));
        // scalar matrix is trivial in PGL3
        let s = ProjectiveTransformation::diagonal(&NumberField::q(), [7, 7, 7]);
        assert_eq!(s.order_in_pgl3(16), Some(1));
    }

    #[test]
    fn pgl_equality_mod_scalars() {
        let a = ProjectiveTransformation::diagonal(&NumberField::q(), [2, 2, -2]);
        let b = ProjectiveTransformation::diagonal(&NumberField::q(), [1, 1, -1]);
        assert_eq!(a, b);
    }

    #[test]
    fn string_wire_format() {
        let k4 = NumberField::cyclotomic(4).unwrap();
        let strs: Vec<String> = ["0", "1", "0", "-1", "0", "0", "0", "0", "zeta4"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let m = ProjectiveTransformation::from_strings(&k4, &strs).unwrap();
        assert_eq!(m.order_in_pgl3(16), Some(2));
        let back = m.to_strings();
        assert_eq!(back[8], "zeta4");
    }
}
