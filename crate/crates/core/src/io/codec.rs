//! Line-oriented text records.
//!
//! | family | example        |
//! |--------|----------------|
//! | lp     | `n=2;0-1,2-3`  |
//! | dyck   | `UUDD`         |
//! | perm   | `2 3 1`        |
//! | code   | `2,3` (empty for the root) |
//!
//! Columns in parse errors are 1-based.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::link_pattern::LinkPattern;
use crate::tree::{DyckPath, Family, PathCode, Perm123, Step, TreeNode};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == c => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(Error::parse(
                self.column(),
                format!("expected {:?}, found {:?}", c as char, b as char),
            )),
            None => Err(Error::parse(
                self.column(),
                format!("expected {:?}, found end of line", c as char),
            )),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(self.column(), "expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| Error::parse(start + 1, "number too large"))
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }
}

fn trim_line(line: &str) -> &str {
    line.trim_end_matches(['\n', '\r'])
}

pub fn parse_link_pattern(line: &str) -> Result<LinkPattern> {
    let mut cur = Cursor::new(trim_line(line));
    cur.expect(b'n')?;
    cur.expect(b'=')?;
    let n_col = cur.column();
    let n = cur.number()?;
    if n == 0 {
        return Err(Error::parse(n_col, "strand count must be positive"));
    }
    cur.expect(b';')?;
    let mut pairs = Vec::with_capacity(n);
    loop {
        let a = cur.number()?;
        cur.expect(b'-')?;
        let b = cur.number()?;
        pairs.push((a, b));
        if cur.at_end() {
            break;
        }
        cur.expect(b',')?;
    }
    if pairs.len() != n {
        return Err(Error::NotAMatching(format!(
            "expected {n} links, found {}",
            pairs.len()
        )));
    }
    LinkPattern::from_pairs(&pairs, n)
}

pub fn parse_dyck(line: &str) -> Result<DyckPath> {
    let line = trim_line(line);
    let steps = line
        .char_indices()
        .map(|(i, c)| match c {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            other => Err(Error::parse(
                i + 1,
                format!("unexpected {other:?}, expected U or D"),
            )),
        })
        .collect::<Result<Vec<_>>>()?;
    DyckPath::new(steps)
}

pub fn parse_perm(line: &str) -> Result<Perm123> {
    let mut cur = Cursor::new(trim_line(line));
    let mut values = Vec::new();
    loop {
        values.push(cur.number()?);
        if cur.at_end() {
            break;
        }
        cur.expect(b' ')?;
    }
    Perm123::new(values)
}

pub fn parse_path_code(line: &str) -> Result<PathCode> {
    let line = trim_line(line);
    if line.is_empty() {
        return Ok(PathCode::default());
    }
    let mut cur = Cursor::new(line);
    let mut ranks = Vec::new();
    loop {
        ranks.push(cur.number()?);
        if cur.at_end() {
            break;
        }
        cur.expect(b',')?;
    }
    PathCode::new(ranks)
}

/// Comma-separated list of indices, as in `--word 1,2,1`.
pub fn parse_index_list(line: &str) -> Result<Vec<usize>> {
    let mut cur = Cursor::new(trim_line(line));
    let mut out = Vec::new();
    if cur.at_end() {
        return Ok(out);
    }
    loop {
        out.push(cur.number()?);
        if cur.at_end() {
            break;
        }
        cur.expect(b',')?;
    }
    Ok(out)
}

pub fn parse_record(line: &str, family: Family) -> Result<TreeNode> {
    Ok(match family {
        Family::Lp => TreeNode::Lp(parse_link_pattern(line)?),
        Family::Dyck => TreeNode::Dyck(parse_dyck(line)?),
        Family::Perm => TreeNode::Perm(parse_perm(line)?),
    })
}

pub fn encode(node: &TreeNode) -> String {
    node.to_string()
}

impl FromStr for LinkPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_link_pattern(s)
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_dyck(s)
    }
}

impl FromStr for Perm123 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_perm(s)
    }
}

impl FromStr for PathCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_path_code(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_examples() {
        let node = parse_record("n=2;0-1,2-3", Family::Lp).unwrap();
        assert_eq!(encode(&node), "n=2;0-1,2-3");
        let node = parse_record("UUDD", Family::Dyck).unwrap();
        assert_eq!(node.family(), Family::Dyck);
        assert!(matches!(
            parse_record("n=2;0-2,1-3", Family::Lp),
            Err(Error::Crossing(..))
        ));
        let node = parse_record("2 3 1\n", Family::Perm).unwrap();
        assert_eq!(encode(&node), "2 3 1");
    }

    #[test]
    fn lp_is_canonicalized() {
        let p: LinkPattern = "n=2;3-0,2-1".parse().unwrap();
        assert_eq!(p.to_string(), "n=2;0-3,1-2");
    }

    #[test]
    fn error_columns() {
        assert_eq!(
            parse_link_pattern("n=2;0-1;2-3"),
            Err(Error::parse(8, "expected ',', found ';'"))
        );
        assert_eq!(
            parse_link_pattern("m=1;0-1"),
            Err(Error::parse(1, "expected 'n', found 'm'"))
        );
        assert_eq!(
            parse_link_pattern("n=1;0-"),
            Err(Error::parse(7, "expected a number"))
        );
        assert_eq!(
            parse_link_pattern("n=0;"),
            Err(Error::parse(3, "strand count must be positive"))
        );
        assert!(matches!(
            parse_link_pattern("n=2;0-1"),
            Err(Error::NotAMatching(_))
        ));
        assert_eq!(
            parse_dyck("UUxD"),
            Err(Error::parse(3, "unexpected 'x', expected U or D"))
        );
        assert!(matches!(parse_dyck("UDD"), Err(Error::InvalidDyck(_))));
        assert_eq!(
            parse_perm("1  2"),
            Err(Error::parse(3, "expected a number"))
        );
        assert!(matches!(parse_perm("1 2 3"), Err(Error::InvalidPerm(_))));
    }

    #[test]
    fn path_codes_and_lists() {
        assert_eq!(parse_path_code("").unwrap(), PathCode::default());
        assert_eq!(parse_path_code("2,3").unwrap().ranks(), &[2, 3]);
        assert!(matches!(parse_path_code("1,3"), Err(Error::InvalidCode(_))));
        assert_eq!(parse_index_list("1,2,1").unwrap(), vec![1, 2, 1]);
        assert_eq!(parse_index_list("").unwrap(), Vec::<usize>::new());
        assert!(parse_index_list("1,,2").is_err());
    }
}
