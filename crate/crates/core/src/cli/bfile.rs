//! OEIS b-file reader: one `n a(n)` pair per line, `#` comments and blank
//! lines ignored.

use std::path::Path;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: u64,
    pub value: BigUint,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_bfile(text: &str) -> Result<Vec<BFileEntry>> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_error(
                line_no,
                format!("expected `n a(n)`, got `{line}`"),
            ));
        };
        let index: u64 = a
            .parse()
            .map_err(|_| parse_error(line_no, format!("bad index `{a}`")))?;
        let value: BigUint = b
            .parse()
            .map_err(|_| parse_error(line_no, format!("bad value `{b}`")))?;
        if value.is_zero() {
            return Err(parse_error(line_no, "values must be positive"));
        }
        if let Some(prev) = entries.last() {
            if index <= prev.index {
                return Err(parse_error(
                    line_no,
                    format!("index {index} does not increase after {}", prev.index),
                ));
            }
        }
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}

pub fn read_bfile(path: &Path) -> Result<Vec<BFileEntry>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_bfile(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blanks() {
        let e = parse_bfile("# A242110\n\n1 1\n  2 2\n6 8\n").unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(
            e[2],
            BFileEntry {
                index: 6,
                value: BigUint::from(8u32)
            }
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_bfile("1 1\nx y\n"),
            Err(Error::Parse {
                line: 2,
                message: "bad index `x`".into()
            })
        );
        assert!(matches!(
            parse_bfile("#\n3 3\n2 2"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_bfile("1 0"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("1 2 3"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
