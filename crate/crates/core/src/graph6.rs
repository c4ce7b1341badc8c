//! Short-form graph6 reader and writer.
//!
//! A record is one header byte `63 + n` followed by the upper-triangle bits
//! `x(0,1) x(0,2) x(1,2) x(0,3) …` packed into 6-bit groups, each stored as
//! `63 + group`, with zero padding in the last group. Only `n <= 62` is
//! supported; long-form headers (`~`) are rejected.

use std::io::{self, BufRead, Write};

use crate::graph::{pair_count, Graph, GraphError, MAX_VERTICES};

/// Optional header some tools prepend to graph6 streams.
pub const STREAM_HEADER: &str = ">>graph6<<";

const SHORT_FORM_MAX: usize = 62;

#[derive(Debug, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("long-form graph6 headers (n > {SHORT_FORM_MAX}) are not supported")]
    LongForm,
    #[error("record for n = {n} needs {expected} body bytes, found {found}")]
    Truncated { n: usize, expected: usize, found: usize },
    #[error("record for n = {n} has {extra} trailing bytes")]
    TrailingBytes { n: usize, extra: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<Graph6Error> },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Recoverable oddities noticed while decoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6Warning {
    NonzeroPadding,
}

/// Number of body bytes for an `n`-vertex record.
#[inline]
pub fn body_len(n: usize) -> usize {
    pair_count(n).div_ceil(6)
}

/// Encodes the current labelling of `g`; never relabels.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= SHORT_FORM_MAX);
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one record, reporting nonzero padding as a warning.
pub fn decode_with_warnings(record: &[u8]) -> Result<(Graph, Vec<Graph6Warning>), Graph6Error> {
    let (&header, body) = record.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in record.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { offset, byte });
        }
    }
    if header == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (header - 63) as usize;
    if n > MAX_VERTICES {
        return Err(GraphError::CapacityExceeded { n, max: MAX_VERTICES }.into());
    }
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { n, expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes { n, extra: body.len() - expected });
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut rows = [0u32; MAX_VERTICES];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    let mut warnings = Vec::new();
    if (k..expected * 6).any(bit) {
        warnings.push(Graph6Warning::NonzeroPadding);
    }
    Ok((Graph::from_rows(n, &rows[..n])?, warnings))
}

pub fn decode(record: &str) -> Result<Graph, Graph6Error> {
    decode_with_warnings(record.as_bytes()).map(|(g, _)| g)
}

/// Decodes a line-delimited stream, yielding `(line number, result)` per
/// record. Blank lines and the optional [`STREAM_HEADER`] are skipped; line
/// numbers start at 1.
pub fn read_stream<R: BufRead>(reader: R) -> impl Iterator<Item = (usize, Result<Graph, Graph6Error>)> {
    reader.lines().enumerate().filter_map(|(idx, line)| {
        let line_no = idx + 1;
        let line = match line {
            Ok(line) => line,
            Err(e) => return Some((line_no, Err(Graph6Error::Io(e)))),
        };
        let record = line.trim_end_matches(['\r', '\n']);
        let record = record.strip_prefix(STREAM_HEADER).unwrap_or(record);
        if record.is_empty() {
            return None;
        }
        let result = decode(record)
            .map_err(|e| Graph6Error::Line { line: line_no, source: Box::new(e) });
        Some((line_no, result))
    })
}

/// Writes one record per line.
pub fn write_stream<'a, W, I>(mut writer: W, graphs: I) -> io::Result<usize>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    let mut count = 0;
    for g in graphs {
        writeln!(writer, "{}", encode(g))?;
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn fixed_vectors() {
        assert_eq!(decode("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(decode("A_").unwrap(), complete(2).unwrap());
        assert_eq!(decode("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(decode("C~").unwrap(), complete(4).unwrap());
        assert_eq!(encode(&complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::empty(5).unwrap()), "D??");
        assert_eq!(encode(&complete(6).unwrap()), "E~~w");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn column_major_bit_order() {
        // x(0,1) x(0,2) x(1,2) = 0 1 0 -> 010000 -> 63 + 16 = 'O'
        let g = Graph::from_edges(3, [(0, 2)]).unwrap();
        assert_eq!(encode(&g), "BO");
        assert_eq!(decode("BO").unwrap(), g);
        let c5 = cycle(5).unwrap();
        assert_eq!(decode(&encode(&c5)).unwrap(), c5);
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(decode(""), Err(Graph6Error::Empty)));
        assert!(matches!(decode("C~ "), Err(Graph6Error::ByteOutOfRange { offset: 2, byte: b' ' })));
        assert!(matches!(decode("D?"), Err(Graph6Error::Truncated { n: 5, expected: 2, found: 1 })));
        assert!(matches!(decode("A??"), Err(Graph6Error::TrailingBytes { n: 2, extra: 1 })));
        assert!(matches!(decode("~?~"), Err(Graph6Error::LongForm)));
        // n = 40 is valid short-form graph6 but exceeds the graph capacity.
        let rec = format!("{}{}", (63 + 40) as u8 as char, "?".repeat(body_len(40)));
        assert!(matches!(decode(&rec), Err(Graph6Error::Graph(GraphError::CapacityExceeded { .. }))));
    }

    #[test]
    fn nonzero_padding_warns_but_decodes() {
        // K_2 body 100000 is '_'; 100001 sets a padding bit.
        let (g, warnings) = decode_with_warnings(&[b'A', 63 + 0b100001]).unwrap();
        assert_eq!(g, complete(2).unwrap());
        assert_eq!(warnings, vec![Graph6Warning::NonzeroPadding]);
        assert!(decode_with_warnings(b"A_").unwrap().1.is_empty());
    }

    #[test]
    fn stream_framing() {
        let input = b">>graph6<<A_\n\nBw\r\nC~ \n" as &[u8];
        let items: Vec<_> = read_stream(input).collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[0].0, 1);
        assert_eq!(items[1].0, 3);
        assert_eq!(*items[1].1.as_ref().unwrap(), complete(3).unwrap());
        match &items[2].1 {
            Err(Graph6Error::Line { line: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let header_line = b">>graph6<<\nA?\n" as &[u8];
        assert_eq!(read_stream(header_line).count(), 1);
    }

    #[test]
    fn encoding_length() {
        for n in 0..=MAX_VERTICES {
            assert_eq!(encode(&complete(n).unwrap()).len(), 1 + body_len(n));
        }
    }
}
