//! Text formats.
//!
//! `.scx` holds one facet per line as whitespace-separated vertex tokens.
//! Lines starting with `#` are comments and blank lines are ignored. The
//! line `EMPTYFACE` is the empty facet, so `{∅}` is written as that single
//! line, and a file without facet lines is the void complex.
//!
//! `.sched` holds one face per line in schedule order, with the same comment
//! rules.
//!
//! `.cert` is a line-oriented tree. The first line is `kind <name>`; each
//! node is either `simplex` or a block
//!
//! ```text
//! split
//!   u <facet indices>
//!   v <facet indices>
//!   intersection
//!     <node>
//!   boundary          (optional)
//!     <node>
//!   u-cert
//!     <node>
//!   v-cert
//!     <node>
//! end
//! ```
//!
//! Facet indices refer to the canonical facet order of the complex at that
//! node. Indentation is written for readability and ignored when reading.

use std::fmt::Write as _;
use std::path::Path;

use sesqui_core::search::{DecompositionCertificate, Kind, Split};
use sesqui_core::subdivision::SubdivisionSchedule;
use sesqui_core::{Face, SimplicialComplex};

use crate::FileError;

pub const EMPTY_FACE: &str = "EMPTYFACE";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_face(line: usize, text: &str) -> Result<Face, FileError> {
    if text == EMPTY_FACE {
        return Ok(Face::empty());
    }
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let face = Face::parse(tokens.iter().copied()).map_err(|e| FileError::parse(line, e))?;
    if face.len() != tokens.len() {
        return Err(FileError::parse(line, "repeated vertex"));
    }
    Ok(face)
}

fn write_face(out: &mut String, face: &Face) {
    if face.is_empty() {
        out.push_str(EMPTY_FACE);
    } else {
        for (i, v) in face.vertices().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(v.as_str());
        }
    }
    out.push('\n');
}

pub fn parse_scx(text: &str) -> Result<SimplicialComplex, FileError> {
    let faces = content_lines(text)
        .map(|(n, l)| parse_face(n, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SimplicialComplex::from_faces(faces))
}

/// One face per line, `EMPTYFACE` for the empty face.
pub fn print_faces(faces: &[Face]) -> String {
    let mut out = String::new();
    for f in faces {
        write_face(&mut out, f);
    }
    out
}

pub fn print_scx(complex: &SimplicialComplex) -> String {
    print_faces(complex.facets())
}

pub fn parse_schedule(text: &str) -> Result<SubdivisionSchedule, FileError> {
    content_lines(text)
        .map(|(n, l)| parse_face(n, l))
        .collect::<Result<Vec<_>, _>>()
        .map(SubdivisionSchedule::new)
}

pub fn print_schedule(schedule: &SubdivisionSchedule) -> String {
    print_faces(schedule.faces())
}

pub fn print_certificate(kind: Kind, cert: &DecompositionCertificate) -> String {
    let mut out = format!("kind {kind}\n");
    write_node(&mut out, cert, 0);
    out
}

fn write_node(out: &mut String, cert: &DecompositionCertificate, depth: usize) {
    let pad = "  ".repeat(depth);
    match cert {
        DecompositionCertificate::Simplex => {
            let _ = writeln!(out, "{pad}simplex");
        }
        DecompositionCertificate::Split(s) => {
            let _ = writeln!(out, "{pad}split");
            for (name, idx) in [("u", &s.u_facets), ("v", &s.v_facets)] {
                let _ = write!(out, "{pad}  {name}");
                for i in idx {
                    let _ = write!(out, " {i}");
                }
                out.push('\n');
            }
            let mut child = |name: &str, c: &DecompositionCertificate| {
                let _ = writeln!(out, "{pad}  {name}");
                write_node(out, c, depth + 2);
            };
            child("intersection", &s.intersection);
            if let Some(b) = &s.boundary {
                child("boundary", b);
            }
            child("u-cert", &s.u);
            child("v-cert", &s.v);
            let _ = writeln!(out, "{pad}end");
        }
    }
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Result<(usize, &'a str), FileError> {
        let (n, l) = self.inner.next().ok_or_else(|| FileError::parse(self.last + 1, "unexpected end of file"))?;
        self.last = n;
        Ok((n, l))
    }

    fn expect(&mut self, word: &str) -> Result<(), FileError> {
        let (n, l) = self.next()?;
        if l != word {
            return Err(FileError::parse(n, format!("expected `{word}`, found `{l}`")));
        }
        Ok(())
    }

    fn indices(&mut self, key: &str) -> Result<Vec<usize>, FileError> {
        let (n, l) = self.next()?;
        let mut parts = l.split_whitespace();
        if parts.next() != Some(key) {
            return Err(FileError::parse(n, format!("expected `{key} <indices>`")));
        }
        parts
            .map(|p| p.parse::<usize>().map_err(|_| FileError::parse(n, format!("bad index `{p}`"))))
            .collect()
    }
}

pub fn parse_certificate(text: &str) -> Result<(Kind, DecompositionCertificate), FileError> {
    let iter: Box<dyn Iterator<Item = (usize, &str)>> = Box::new(content_lines(text));
    let mut lines = Lines { inner: iter.peekable(), last: 0 };
    let (n, header) = lines.next()?;
    let kind = header
        .strip_prefix("kind ")
        .ok_or_else(|| FileError::parse(n, "expected `kind <name>`"))?
        .trim()
        .parse::<Kind>()
        .map_err(|e| FileError::parse(n, e))?;
    let cert = read_node(&mut lines)?;
    if let Some((n, l)) = lines.inner.next() {
        return Err(FileError::parse(n, format!("trailing content `{l}`")));
    }
    Ok((kind, cert))
}

fn read_node(lines: &mut Lines<'_>) -> Result<DecompositionCertificate, FileError> {
    let (n, l) = lines.next()?;
    match l {
        "simplex" => Ok(DecompositionCertificate::Simplex),
        "split" => {
            let u_facets = lines.indices("u")?;
            let v_facets = lines.indices("v")?;
            lines.expect("intersection")?;
            let intersection = read_node(lines)?;
            let boundary = if lines.inner.peek().is_some_and(|(_, l)| *l == "boundary") {
                lines.next()?;
                Some(read_node(lines)?)
            } else {
                None
            };
            lines.expect("u-cert")?;
            let u = read_node(lines)?;
            lines.expect("v-cert")?;
            let v = read_node(lines)?;
            lines.expect("end")?;
            Ok(DecompositionCertificate::split(Split { u_facets, v_facets, intersection, boundary, u, v }))
        }
        other => Err(FileError::parse(n, format!("expected `simplex` or `split`, found `{other}`"))),
    }
}

pub fn read_file(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.to_path_buf(), source })
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), FileError> {
    std::fs::write(path, contents).map_err(|source| FileError::Io { path: path.to_path_buf(), source })
}

pub fn read_scx(path: &Path) -> Result<SimplicialComplex, FileError> {
    parse_scx(&read_file(path)?).map_err(|e| e.in_file(path))
}

pub fn read_schedule(path: &Path) -> Result<SubdivisionSchedule, FileError> {
    parse_schedule(&read_file(path)?).map_err(|e| e.in_file(path))
}

pub fn read_certificate(path: &Path) -> Result<(Kind, DecompositionCertificate), FileError> {
    parse_certificate(&read_file(path)?).map_err(|e| e.in_file(path))
}
