//! Group descriptors, Cayley-table files and corpus files.
//!
//! ```text
//! cyclic(n)
//! abelian[k1, k2, ...]
//! direct(D1, D2)
//! semidirect(abelian[...], q, action{a->b, b->a*b^2, ...})
//! perm(degree){(0 1 2)(3 4), (0 1)}
//! catalog(name, params...)
//! cayley(path)
//! ```
//!
//! In an action, `a, b, c, …` name the generators of the abelian group in the
//! order of its factors. In `perm`, cycles written side by side form one
//! generator and commas separate generators.

use std::path::{Path, PathBuf};

use thiserror::Error;

use mna_core::construct::{
    abelian, catalog, cycles_to_images, cyclic, direct_product, from_permutations, semidirect, AbelianType,
    ActionSpec, CatalogParam, Word,
};
use mna_core::{FiniteGroup, GroupError, Limits};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{path}: {msg}")]
    Cayley { path: String, msg: String },
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl InputError {
    /// True when the failure is a size cap rather than malformed input.
    pub fn is_cap(&self) -> bool {
        matches!(self, InputError::Group(GroupError::CapExceeded { .. }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    Cyclic(u64),
    Abelian(Vec<u64>),
    Direct(Box<Descriptor>, Box<Descriptor>),
    Semidirect { base: Vec<u64>, q: u64, images: Vec<Word> },
    Perm { degree: usize, generators: Vec<Vec<Vec<usize>>> },
    Catalog { name: String, params: Vec<CatalogParam> },
    Cayley(PathBuf),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

type PResult<T> = Result<T, InputError>;

impl<'a> Parser<'a> {
    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(InputError::Syntax {
            line: self.line,
            col: self.src[..self.pos].chars().count() + 1,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn expect_str(&mut self, s: &str) -> PResult<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            self.error(format!("expected \"{s}\""))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos || self.src[start..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos = start;
            return self.error("expected a name");
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn int(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek_raw(), Some('-' | '+')) {
            self.pos += 1;
        }
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        match self.src[start..self.pos].parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.error("expected an integer")
            }
        }
    }

    fn uint(&mut self) -> PResult<u64> {
        let start = self.pos;
        let v = self.int()?;
        if v < 0 {
            self.pos = start;
            self.skip_ws();
            return self.error("expected a non-negative integer");
        }
        Ok(v as u64)
    }

    fn list<T>(&mut self, close: char, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn descriptor(&mut self) -> PResult<Descriptor> {
        let start = self.pos;
        let name = self.ident()?;
        match name.as_str() {
            "cyclic" => {
                self.expect('(')?;
                let n = self.uint()?;
                self.expect(')')?;
                Ok(Descriptor::Cyclic(n))
            }
            "abelian" => Ok(Descriptor::Abelian(self.abelian_body()?)),
            "direct" => {
                self.expect('(')?;
                let a = self.descriptor()?;
                self.expect(',')?;
                let b = self.descriptor()?;
                self.expect(')')?;
                Ok(Descriptor::Direct(Box::new(a), Box::new(b)))
            }
            "semidirect" => self.semidirect_body(),
            "perm" => self.perm_body(),
            "catalog" => {
                self.expect('(')?;
                let name = self.symbol()?;
                let params = if self.eat(',') {
                    self.list(')', Self::catalog_param)?
                } else {
                    self.expect(')')?;
                    Vec::new()
                };
                Ok(Descriptor::Catalog { name, params })
            }
            "cayley" => {
                self.expect('(')?;
                let path = self.path()?;
                self.expect(')')?;
                Ok(Descriptor::Cayley(PathBuf::from(path)))
            }
            other => {
                self.pos = start;
                self.skip_ws();
                self.error(format!("unknown constructor {other:?}"))
            }
        }
    }

    fn abelian_body(&mut self) -> PResult<Vec<u64>> {
        self.expect('[')?;
        self.list(']', Self::uint)
    }

    fn semidirect_body(&mut self) -> PResult<Descriptor> {
        self.expect('(')?;
        self.expect_str("abelian")?;
        let base = self.abelian_body()?;
        self.expect(',')?;
        let q = self.uint()?;
        self.expect(',')?;
        self.expect_str("action")?;
        self.expect('{')?;
        let rules = self.list('}', |p| {
            p.skip_ws();
            let at = p.pos;
            let g = p.generator()?;
            p.expect_str("->")?;
            Ok((g, at, p.word()?))
        })?;
        self.expect(')')?;
        let mut images: Vec<Option<Word>> = vec![None; base.len()];
        for (g, at, w) in rules {
            if g >= base.len() || images[g].is_some() {
                self.pos = at;
                let msg = if g >= base.len() {
                    format!("the base group has only {} generators", base.len())
                } else {
                    "generator mapped twice".to_string()
                };
                return self.error(msg);
            }
            images[g] = Some(w);
        }
        let images =
            images.into_iter().enumerate().map(|(i, w)| w.unwrap_or_else(|| Word::generator(i))).collect();
        Ok(Descriptor::Semidirect { base, q, images })
    }

    fn generator(&mut self) -> PResult<usize> {
        self.skip_ws();
        match self.peek_raw() {
            Some(c @ 'a'..='z') => {
                self.pos += 1;
                Ok((c as u8 - b'a') as usize)
            }
            _ => self.error("expected a generator letter"),
        }
    }

    fn word(&mut self) -> PResult<Word> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Word::new(Vec::new()));
        }
        let mut factors = Vec::new();
        loop {
            let g = self.generator()?;
            let e = if self.eat('^') { self.int()? } else { 1 };
            factors.push((g, e));
            if !self.eat('*') {
                return Ok(Word::new(factors));
            }
        }
    }

    fn perm_body(&mut self) -> PResult<Descriptor> {
        self.expect('(')?;
        let degree = self.uint()? as usize;
        self.expect(')')?;
        self.expect('{')?;
        let generators = self.list('}', |p| {
            let mut cycles = Vec::new();
            while p.peek() == Some('(') {
                p.pos += 1;
                let mut cycle = Vec::new();
                while !p.eat(')') {
                    let at = p.pos;
                    let x = p.uint()? as usize;
                    if x >= degree {
                        p.pos = at;
                        p.skip_ws();
                        return p.error(format!("point {x} is outside degree {degree}"));
                    }
                    cycle.push(x);
                }
                cycles.push(cycle);
            }
            if cycles.is_empty() {
                return p.error("expected a cycle");
            }
            Ok(cycles)
        })?;
        Ok(Descriptor::Perm { degree, generators })
    }

    fn quoted(&mut self) -> PResult<String> {
        self.expect('"')?;
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c == '"' {
                let s = self.src[start..self.pos].to_string();
                self.pos += 1;
                return Ok(s);
            }
            self.pos += c.len_utf8();
        }
        self.error("unterminated string")
    }

    fn symbol(&mut self) -> PResult<String> {
        if self.peek() == Some('"') {
            self.quoted()
        } else {
            self.ident()
        }
    }

    fn catalog_param(&mut self) -> PResult<CatalogParam> {
        match self.peek() {
            Some('"') => Ok(CatalogParam::Sym(self.quoted()?)),
            Some(c) if c.is_ascii_digit() => Ok(CatalogParam::Int(self.int()?)),
            Some(c @ ('+' | '-')) => {
                let rest = &self.src[self.pos + 1..];
                if rest.starts_with(|d: char| d.is_ascii_digit()) {
                    Ok(CatalogParam::Int(self.int()?))
                } else {
                    self.pos += 1;
                    Ok(CatalogParam::Sym(c.to_string()))
                }
            }
            _ => Ok(CatalogParam::Sym(self.ident()?)),
        }
    }

    fn path(&mut self) -> PResult<String> {
        if self.peek() == Some('"') {
            return self.quoted();
        }
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c == ')' || c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
        if start == self.pos {
            return self.error("expected a path");
        }
        Ok(self.src[start..self.pos].to_string())
    }
}

/// Parses a descriptor written on line `line` of its source.
pub fn parse_descriptor_at(src: &str, line: usize) -> Result<Descriptor, InputError> {
    let mut p = Parser { src, pos: 0, line };
    let d = p.descriptor()?;
    p.skip_ws();
    if p.pos < src.len() {
        return p.error("trailing input after descriptor");
    }
    Ok(d)
}

pub fn parse_descriptor(src: &str) -> Result<Descriptor, InputError> {
    parse_descriptor_at(src, 1)
}

/// Builds the group; Cayley paths are resolved against `base_dir`.
pub fn build(d: &Descriptor, limits: &Limits, base_dir: &Path) -> Result<FiniteGroup, InputError> {
    Ok(match d {
        Descriptor::Cyclic(n) => cyclic(*n as usize, limits)?,
        Descriptor::Abelian(ks) => abelian(&AbelianType::new(ks.clone())?, limits)?,
        Descriptor::Direct(a, b) => {
            direct_product(&build(a, limits, base_dir)?, &build(b, limits, base_dir)?, limits)?
        }
        Descriptor::Semidirect { base, q, images } => semidirect(
            &AbelianType::new(base.clone())?,
            *q as usize,
            &ActionSpec { images: images.clone() },
            limits,
        )?,
        Descriptor::Perm { degree, generators } => {
            let gens: Vec<Vec<usize>> = generators
                .iter()
                .map(|cycles| cycles_to_images(*degree, cycles))
                .collect::<Result<_, _>>()?;
            from_permutations(*degree, &gens, limits)?
        }
        Descriptor::Catalog { name, params } => catalog(name, params, limits)?,
        Descriptor::Cayley(path) => read_cayley(&base_dir.join(path), limits)?,
    })
}

/// Parses and builds in one step.
pub fn parse_group(src: &str, limits: &Limits, base_dir: &Path) -> Result<FiniteGroup, InputError> {
    let g = build(&parse_descriptor(src)?, limits, base_dir)?;
    Ok(g.with_label(src.trim()))
}

/// Reads a Cayley table: `n` lines of `n` element indices, row `i` column `j`
/// holding `i·j`, with element `0` the identity.
pub fn read_cayley(path: &Path, limits: &Limits) -> Result<FiniteGroup, InputError> {
    let shown = path.display().to_string();
    let text =
        std::fs::read_to_string(path).map_err(|source| InputError::Io { path: shown.clone(), source })?;
    parse_cayley(&text, &shown, limits)
}

pub fn parse_cayley(text: &str, name: &str, limits: &Limits) -> Result<FiniteGroup, InputError> {
    let err = |msg: String| InputError::Cayley { path: name.to_string(), msg };
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(format!("line {}: {e}", i + 1)))?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(err("empty table".into()));
    }
    limits.check_order("Cayley table", n)?;
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(err(format!("row {i} has {} entries, expected {n}", r.len())));
    }
    let table: Vec<u32> = rows.into_iter().flatten().collect();
    FiniteGroup::from_table(name, n, table).map_err(|e| err(e.to_string()))
}

/// One corpus line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub descriptor: String,
    pub line: usize,
}

/// Reads a corpus: one descriptor per line, `#` starting a comment. A
/// trailing `# name` names the entry; full-line comments and blank lines are
/// skipped. Every descriptor is parsed up front so syntax errors surface
/// before any work starts.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, InputError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c.trim())),
            None => (raw, None),
        };
        let descriptor = body.trim();
        if descriptor.is_empty() {
            continue;
        }
        parse_descriptor_at(body, i + 1)?;
        let name = comment.filter(|c| !c.is_empty()).map_or_else(|| descriptor.to_string(), str::to_string);
        out.push(CorpusEntry { name, descriptor: descriptor.to_string(), line: i + 1 });
    }
    Ok(out)
}
