//! Plain-text group files.
//!
//! ```text
//! # comment
//! degree 5
//! gen (1,2)
//! gen (1,2,3,4,5)
//! socle-gen (1,2,3)
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub socle_generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut degree: Option<usize> = None;
        let mut generators = Vec::new();
        let mut socle_generators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (keyword, rest) = line
                .split_once(char::is_whitespace)
                .map(|(k, r)| (k, r.trim()))
                .unwrap_or((line, ""));
            let err = |message: String| Error::GroupFile {
                line: line_no,
                message,
            };
            match (keyword, degree) {
                ("degree", None) => {
                    let n: usize = rest
                        .parse()
                        .map_err(|_| err(format!("invalid degree `{rest}`")))?;
                    if n == 0 {
                        return Err(err("degree must be positive".into()));
                    }
                    degree = Some(n);
                }
                ("degree", Some(_)) => return Err(err("duplicate `degree` line".into())),
                (_, None) => return Err(err("first line must be `degree N`".into())),
                ("gen", Some(n)) => generators.push(
                    Permutation::parse_cycles(rest, n).map_err(|e| err(e.to_string()))?,
                ),
                ("socle-gen", Some(n)) => socle_generators.push(
                    Permutation::parse_cycles(rest, n).map_err(|e| err(e.to_string()))?,
                ),
                (other, Some(_)) => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }
        let degree = degree.ok_or(Error::GroupFile {
            line: 0,
            message: "missing `degree` line".into(),
        })?;
        Ok(GroupFile {
            degree,
            generators,
            socle_generators,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn from_group(group: &PermGroup, socle: Option<&PermGroup>) -> Self {
        GroupFile {
            degree: group.degree(),
            generators: group.generators().to_vec(),
            socle_generators: socle.map(|s| s.generators().to_vec()).unwrap_or_default(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("degree {}\n", self.degree);
        for g in &self.generators {
            let _ = writeln!(s, "gen {g}");
        }
        for g in &self.socle_generators {
            let _ = writeln!(s, "socle-gen {g}");
        }
        s
    }

    pub fn group(&self) -> Result<PermGroup> {
        PermGroup::new(self.degree, self.generators.clone())
    }

    pub fn socle(&self) -> Result<Option<PermGroup>> {
        if self.socle_generators.is_empty() {
            return Ok(None);
        }
        PermGroup::new(self.degree, self.socle_generators.clone()).map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S5: &str = "# symmetric group\ndegree 5\ngen (1,2)\n\ngen (1, 2,3,4,5)\nsocle-gen (1,2,3)\nsocle-gen (3,4,5)\n";

    #[test]
    fn parse_and_echo() {
        let f = GroupFile::parse(S5).unwrap();
        assert_eq!(f.degree, 5);
        assert_eq!(f.group().unwrap().order(), 120);
        assert_eq!(f.socle().unwrap().unwrap().order(), 60);
        let text = f.to_text();
        assert_eq!(
            text,
            "degree 5\ngen (1,2)\ngen (1,2,3,4,5)\nsocle-gen (1,2,3)\nsocle-gen (3,4,5)\n"
        );
        assert_eq!(GroupFile::parse(&text).unwrap(), f);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            GroupFile::parse("gen (1,2)\n"),
            Err(Error::GroupFile { line: 1, .. })
        ));
        assert!(matches!(
            GroupFile::parse("degree 3\ngen (1,4)\n"),
            Err(Error::GroupFile { line: 2, .. })
        ));
        assert!(matches!(
            GroupFile::parse("degree 3\nfoo (1,2)\n"),
            Err(Error::GroupFile { line: 2, .. })
        ));
        assert!(GroupFile::parse("# only comments\n").is_err());
    }
}
