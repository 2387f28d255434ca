//! The two-level ordering of primitive triples and its table renderings.
//!
//! Rows are ordered first by the generating side (`N = S / 2`) and then by
//! the rank `n` of `t` among the partitions of that side.

use std::borrow::Borrow;
use std::fmt;
use std::io::{self, Write};
use std::vec;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, rank_of, Partition, Side};
use crate::triple::{construct, invert, PrimitiveTriple};

/// Position `N.n` of a triple in the ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderIndex {
    pub first_level: u64,
    pub second_level: u64,
}

impl fmt::Display for OrderIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.first_level, self.second_level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub index: OrderIndex,
    pub partition: Partition,
    pub triple: PrimitiveTriple,
}

/// Lazily yields the rows for each side from `from` to `to` inclusive.
///
/// Only the partitions of the current side are held in memory.
#[derive(Debug, Clone)]
pub struct Rows {
    next_side: Option<Side>,
    last_side: Side,
    current: vec::IntoIter<TableRow>,
}

impl Iterator for Rows {
    type Item = TableRow;

    fn next(&mut self) -> Option<TableRow> {
        loop {
            if let Some(row) = self.current.next() {
                return Some(row);
            }
            let side = self.next_side?;
            self.next_side = (side < self.last_side).then(|| Side::new(side.value() + 2).unwrap());
            self.current = rows_for_side(side)
                .expect("range was checked against overflow when the stream was created")
                .into_iter();
        }
    }
}

impl std::iter::FusedIterator for Rows {}

fn rows_for_side(side: Side) -> Result<Vec<TableRow>> {
    enumerate_partitions(side)?
        .into_iter()
        .enumerate()
        .map(|(i, partition)| {
            Ok(TableRow {
                index: OrderIndex {
                    first_level: side.ordinal(),
                    second_level: i as u64 + 1,
                },
                partition,
                triple: construct(&partition)?,
            })
        })
        .collect()
}

/// Rows for every side in `from..=to`, ordered by `(N, n)`.
pub fn stream(from: Side, to: Side) -> Result<Rows> {
    if from > to {
        return Err(Error::EmptyRange {
            from: from.value(),
            to: to.value(),
        });
    }
    // Largest hypotenuse of a side is at t = S/2, l = 1: S + S^2/2 + 1.
    let s = to.value();
    arith::add(arith::add(s, arith::mul(s / 2, s)?)?, 1)?;
    Ok(Rows {
        next_side: Some(from),
        last_side: to,
        current: Vec::new().into_iter(),
    })
}

/// Where `triple` sits in the ordering.
pub fn index_of(triple: &PrimitiveTriple) -> Result<OrderIndex> {
    let partition = invert(triple.x(), triple.y(), triple.z())?;
    Ok(OrderIndex {
        first_level: partition.side().ordinal(),
        second_level: rank_of(&partition)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    /// `N.n S t l x y z`, with `S` only on the first row of each side.
    Appendix,
    /// Tab-separated, `S` on every row.
    #[default]
    Tsv,
    /// One JSON object per row.
    Jsonl,
}

#[derive(Serialize)]
struct JsonRow {
    n1: u64,
    n2: u64,
    s: u64,
    t: u64,
    l: u64,
    x: u64,
    y: u64,
    z: u64,
}

impl From<&TableRow> for JsonRow {
    fn from(row: &TableRow) -> Self {
        JsonRow {
            n1: row.index.first_level,
            n2: row.index.second_level,
            s: row.partition.side().value(),
            t: row.partition.t(),
            l: row.partition.l(),
            x: row.triple.x(),
            y: row.triple.y(),
            z: row.triple.z(),
        }
    }
}

/// Writes rows one line each, newline-terminated.
pub fn write_table<W, I>(out: &mut W, rows: I, format: TableFormat) -> io::Result<()>
where
    W: Write,
    I: IntoIterator,
    I::Item: Borrow<TableRow>,
{
    let mut previous_side = None;
    for row in rows {
        let row = row.borrow();
        let side = row.partition.side();
        let (x, y, z) = row.triple.as_tuple();
        let (t, l) = (row.partition.t(), row.partition.l());
        match format {
            TableFormat::Appendix => {
                if previous_side == Some(side) {
                    writeln!(out, "{}\t\t{t}\t{l}\t{x}\t{y}\t{z}", row.index)?;
                } else {
                    writeln!(out, "{}\t{side}\t{t}\t{l}\t{x}\t{y}\t{z}", row.index)?;
                }
            }
            TableFormat::Tsv => {
                writeln!(out, "{}\t{side}\t{t}\t{l}\t{x}\t{y}\t{z}", row.index)?;
            }
            TableFormat::Jsonl => {
                serde_json::to_writer(&mut *out, &JsonRow::from(row))?;
                writeln!(out)?;
            }
        }
        previous_side = Some(side);
    }
    Ok(())
}

pub fn render_table<I>(rows: I, format: TableFormat) -> String
where
    I: IntoIterator,
    I::Item: Borrow<TableRow>,
{
    let mut buf = Vec::new();
    write_table(&mut buf, rows, format).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("table output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn side(v: u64) -> Side {
        Side::new(v).unwrap()
    }

    fn rows(from: u64, to: u64) -> Vec<TableRow> {
        stream(side(from), side(to)).unwrap().collect()
    }

    fn triples(rows: &[TableRow]) -> Vec<(u64, u64, u64)> {
        rows.iter().map(|r| r.triple.as_tuple()).collect()
    }

    #[test]
    fn stream_examples() {
        let r = rows(2, 2);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].index.to_string(), "1.1");
        assert_eq!(triples(&r), vec![(3, 4, 5)]);

        let r = rows(30, 30);
        assert_eq!(
            r.iter().map(|r| r.index.to_string()).collect::<Vec<_>>(),
            vec!["15.1", "15.2", "15.3", "15.4"]
        );
        assert_eq!(
            triples(&r),
            vec![(255, 32, 257), (55, 48, 73), (39, 80, 89), (31, 480, 481)]
        );
    }

    #[test]
    fn stream_range_errors() {
        assert!(matches!(
            stream(side(10), side(8)),
            Err(Error::EmptyRange { from: 10, to: 8 })
        ));
        assert!(matches!(
            stream(side(2), side(1 << 40)),
            Err(Error::Overflow { .. })
        ));
        // largest side that still fits: S^2/2 + S + 1 <= u64::MAX
        assert!(stream(side(1 << 32), side(1 << 32)).is_ok());
    }

    #[test]
    fn stream_is_strictly_increasing_and_indexable() {
        let r = rows(2, 3000);
        assert!(r.windows(2).all(|w| w[0].index < w[1].index));
        for row in &r {
            assert_eq!(index_of(&row.triple), Ok(row.index));
            assert_eq!(construct(&row.partition), Ok(row.triple));
        }
    }

    #[test]
    fn stream_is_lazy_and_fused() {
        let mut it = stream(side(2), side(4)).unwrap();
        assert_eq!(it.next().map(|r| r.index.first_level), Some(1));
        assert_eq!(it.next().map(|r| r.index.first_level), Some(2));
        assert!(it.next().is_none());
        assert!(it.next().is_none());
        // an effectively unbounded range costs nothing until consumed
        let first = stream(side(2), side(1 << 32)).unwrap().next().unwrap();
        assert_eq!(first.triple.as_tuple(), (3, 4, 5));
    }

    #[test]
    fn index_examples() {
        let idx = |x, y, z| index_of(&PrimitiveTriple::new(x, y, z).unwrap()).unwrap();
        assert_eq!(idx(3, 4, 5).to_string(), "1.1");
        assert_eq!(idx(55, 48, 73).to_string(), "15.2");
        // 3280 partitions by t: 8, 40, 328, 1640
        assert_eq!(idx(4961, 6480, 8161).to_string(), "1640.2");
    }

    #[test]
    fn render_examples() {
        let r = rows(6, 6);
        assert_eq!(
            render_table(&r, TableFormat::Appendix),
            "3.1\t6\t1\t3\t15\t8\t17\n3.2\t\t3\t1\t7\t24\t25\n"
        );
        assert_eq!(
            render_table(&r, TableFormat::Tsv),
            "3.1\t6\t1\t3\t15\t8\t17\n3.2\t6\t3\t1\t7\t24\t25\n"
        );
        assert_eq!(
            render_table(&r[..1], TableFormat::Jsonl),
            "{\"n1\":3,\"n2\":1,\"s\":6,\"t\":1,\"l\":3,\"x\":15,\"y\":8,\"z\":17}\n"
        );
        assert_eq!(render_table(&[] as &[TableRow], TableFormat::Appendix), "");
        assert_eq!(render_table(&[] as &[TableRow], TableFormat::Jsonl), "");
    }

    #[test]
    fn jsonl_round_trips_through_serde_json() {
        let r = rows(2, 40);
        let text = render_table(&r, TableFormat::Jsonl);
        for (line, row) in text.lines().zip(&r) {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["n1"], row.index.first_level);
            assert_eq!(v["z"], row.triple.z());
            assert_eq!(v.as_object().unwrap().len(), 8);
        }
        assert_eq!(text.lines().count(), r.len());
    }
}
