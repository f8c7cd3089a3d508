//! Plain-text instance files.
//!
//! ```text
//! # optional comments
//! rects 1
//! x_min y_min x_max y_max
//! ...
//! ```
//!
//! Rect ids follow line order. Parsing does not enforce general position;
//! callers validate before analysis.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geom::{Coord, Family};

pub const FORMAT_VERSION: u32 = 1;
const HEADER_TAG: &str = "rects";

pub fn parse_instance(text: &str) -> Result<Family> {
    let mut header_seen = false;
    let mut bounds = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if !header_seen {
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(HEADER_TAG), Some(v), None) => {
                    let version: u32 = v.parse().map_err(|_| err(format!("bad format version {v:?}")))?;
                    if version != FORMAT_VERSION {
                        return Err(err(format!("unsupported format version {version}")));
                    }
                }
                _ => return Err(err(format!("expected header \"{HEADER_TAG} {FORMAT_VERSION}\""))),
            }
            header_seen = true;
            continue;
        }
        let values = line
            .split_whitespace()
            .map(|tok| tok.parse::<Coord>().map_err(|_| err(format!("not an integer: {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match values[..] {
            [x0, y0, x1, y1] => bounds.push((x0, y0, x1, y1)),
            _ => return Err(err(format!("expected 4 integers, found {}", values.len()))),
        }
    }
    if !header_seen {
        return Err(Error::Parse { line: 0, message: "missing header".into() });
    }
    Family::from_bounds(bounds).map_err(|e| match e {
        Error::InvalidRect { id, .. } => Error::Parse { line: 0, message: format!("rectangle {id}: {e}") },
        other => other,
    })
}

pub fn write_instance(f: &Family) -> String {
    let mut out = format!("{HEADER_TAG} {FORMAT_VERSION}\n");
    for r in f {
        let _ = writeln!(out, "{} {} {} {}", r.x_min, r.y_min, r.x_max, r.y_max);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let f = parse_instance("# two rects\nrects 1\n0 0 4 3\n\n# b\n2 1 6 5\n").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.get(1).x_max, 6);
        assert_eq!(f.get(1).y_min, 1);
    }

    #[test]
    fn rejects_missing_header_and_bad_lines() {
        assert!(parse_instance("0 0 1 1\n").is_err());
        assert!(parse_instance("rects 2\n0 0 1 1\n").is_err());
        assert!(matches!(parse_instance("rects 1\n0 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_instance("rects 1\n0 0 1 x\n").is_err());
        assert!(parse_instance("rects 1\n3 0 1 1\n").is_err());
    }

    #[test]
    fn empty_family_is_allowed() {
        assert!(parse_instance("rects 1\n").unwrap().is_empty());
    }

    #[test]
    fn writes_what_it_reads() {
        let text = "rects 1\n-3 0 4 3\n2 1 6 5\n";
        assert_eq!(write_instance(&parse_instance(text).unwrap()), text);
    }
}
