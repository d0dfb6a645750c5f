//! Table rendering for distribution and expansion output.
//!
//! Every row is (n, exponents, count). The marker columns follow the fixed
//! header order n,k,m,l,j,count — k for cycles (t), m for fixed points (u),
//! l for excedances (x), j for inversions (y) — with unused columns omitted
//! per the stats selection. Counts are decimal strings in JSON so exactness
//! survives any JSON reader.

use std::io::{self, Write};

use permcycle_core::series::{Marker, MultiPoly};

/// Column letter for a marker in the CSV header and JSON keys.
pub fn column_name(marker: Marker) -> &'static str {
    match marker {
        Marker::T => "k",
        Marker::U => "m",
        Marker::X => "l",
        Marker::Y => "j",
    }
}

/// One output record: size, the selected exponents, and an exact count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub exponents: Vec<u16>,
    pub count: i128,
}

/// A distribution table over a fixed set of marker columns.
#[derive(Clone, Debug)]
pub struct Table {
    markers: Vec<Marker>,
    rows: Vec<Row>,
}

impl Table {
    /// Table with the given marker columns (canonical order enforced by the
    /// caller; selections produced by this crate are always in t,u,x,y order).
    pub fn new(markers: &[Marker]) -> Self {
        Table {
            markers: markers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn markers(&self) -> &[Marker] {
        &self.markers
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Appends the terms of a z^n slice. The polynomial must already be
    /// specialized to the table's markers; term order is the row order.
    pub fn push_slice(&mut self, n: usize, poly: &MultiPoly) {
        for (mono, count) in poly.iter() {
            let exponents = self.markers.iter().map(|&m| mono.exponent(m)).collect();
            self.rows.push(Row {
                n,
                exponents,
                count,
            });
        }
    }

    pub fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        write!(out, "n")?;
        for &m in &self.markers {
            write!(out, ",{}", column_name(m))?;
        }
        writeln!(out, ",count")?;
        for row in &self.rows {
            write!(out, "{}", row.n)?;
            for e in &row.exponents {
                write!(out, ",{e}")?;
            }
            writeln!(out, ",{}", row.count)?;
        }
        Ok(())
    }

    pub fn write_json(&self, out: &mut impl Write) -> io::Result<()> {
        let mut records = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), serde_json::json!(row.n));
            for (&m, &e) in self.markers.iter().zip(&row.exponents) {
                obj.insert(column_name(m).into(), serde_json::json!(e));
            }
            obj.insert("count".into(), serde_json::json!(row.count.to_string()));
            records.push(serde_json::Value::Object(obj));
        }
        serde_json::to_writer_pretty(&mut *out, &serde_json::Value::Array(records))
            .map_err(io::Error::other)?;
        writeln!(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcycle_core::series::Monomial;

    #[test]
    fn csv_layout_for_cycle_rows() {
        let poly = MultiPoly::term(1, Monomial::new(1, 0, 0, 0))
            .add(&MultiPoly::term(3, Monomial::new(2, 0, 0, 0)))
            .unwrap()
            .add(&MultiPoly::term(1, Monomial::new(3, 0, 0, 0)))
            .unwrap();
        let mut table = Table::new(&[Marker::T]);
        table.push_slice(3, &poly);
        let mut buf = Vec::new();
        table.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,k,count\n3,1,1\n3,2,3\n3,3,1\n"
        );
    }

    #[test]
    fn json_counts_are_strings() {
        let mut table = Table::new(&[Marker::T, Marker::Y]);
        table.push_slice(2, &MultiPoly::term(i128::MAX, Monomial::new(1, 0, 0, 2)));
        let mut buf = Vec::new();
        table.write_json(&mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v[0]["n"], 2);
        assert_eq!(v[0]["k"], 1);
        assert_eq!(v[0]["j"], 2);
        assert_eq!(v[0]["count"], serde_json::json!(i128::MAX.to_string()));
    }
}
