//! The workspace file format: one ring block plus optional module blocks.
//!
//! ```text
//! # comment
//! ring
//!   char 32003
//!   vars x, y
//!   ideal x^2, x*y
//! end
//!
//! module M
//!   degrees 0, 0
//!   relation x, y
//! end
//! ```
//!
//! Each `relation` line is one relation column: a comma-separated polynomial
//! per generator, homogeneous and degree-consistent with the generator
//! degrees. The built-in module names `k` (residue field), `m` (irrelevant
//! maximal ideal) and `R` (the free module of rank one) are always available.

use crate::error::{CliError, Result};
use std::collections::BTreeMap;
use torsion_core::{
    field::is_prime, free_module, irrelevant_ideal, residue_field, ModuleElement, Polynomial,
    PresentedModule, PrimeField, RingDescriptor, TwistedFreeModule,
};

#[derive(Debug, Clone)]
pub struct Workspace {
    pub ring: RingDescriptor,
    pub modules: BTreeMap<String, PresentedModule>,
}

impl Workspace {
    /// Resolve a module name: user modules shadow nothing; `k`, `m`, `R` are
    /// built in.
    pub fn module(&self, name: &str) -> Result<PresentedModule> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        match name {
            "k" => Ok(residue_field(&self.ring)),
            "m" => Ok(irrelevant_ideal(&self.ring)),
            "R" => Ok(free_module(&self.ring, vec![0])),
            _ => Err(CliError::UnknownModule(name.to_string())),
        }
    }

    pub fn module_names(&self) -> Vec<String> {
        let mut names: Vec<String> = vec!["R".into(), "k".into(), "m".into()];
        names.extend(self.modules.keys().cloned());
        names
    }
}

pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let mut ring: Option<RingDescriptor> = None;
    let mut raw_modules: Vec<(String, Vec<i64>, Vec<Vec<String>>, usize)> = Vec::new();

    let mut lines = text.lines().enumerate().peekable();
    while let Some((ln, raw)) = lines.next() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (head, rest) = split_head(line);
        match head {
            "ring" => {
                if ring.is_some() {
                    return Err(err(ln, "duplicate ring block"));
                }
                let mut char_p: Option<u32> = None;
                let mut vars: Option<Vec<String>> = None;
                let mut ideal_srcs: Vec<(usize, String)> = Vec::new();
                loop {
                    let Some((ln2, raw2)) = lines.next() else {
                        return Err(err(ln, "unterminated ring block"));
                    };
                    let line2 = strip_comment(raw2);
                    if line2.is_empty() {
                        continue;
                    }
                    let (h2, r2) = split_head(line2);
                    match h2 {
                        "end" => break,
                        "char" => {
                            let p: u32 = r2
                                .trim()
                                .parse()
                                .map_err(|_| err(ln2, "char expects a prime integer"))?;
                            if !is_prime(p) || p < 5 {
                                return Err(err(
                                    ln2,
                                    &format!("characteristic {p} must be a prime >= 5"),
                                ));
                            }
                            char_p = Some(p);
                        }
                        "vars" => {
                            let vs: Vec<String> = r2
                                .split(',')
                                .map(|s| s.trim().to_string())
                                .filter(|s| !s.is_empty())
                                .collect();
                            if vs.is_empty() {
                                return Err(err(ln2, "vars expects at least one name"));
                            }
                            vars = Some(vs);
                        }
                        "ideal" => {
                            for part in r2.split(',') {
                                let part = part.trim();
                                if !part.is_empty() {
                                    ideal_srcs.push((ln2, part.to_string()));
                                }
                            }
                        }
                        other => {
                            return Err(err(ln2, &format!("unknown ring field `{other}`")));
                        }
                    }
                }
                let p = char_p.ok_or_else(|| err(ln, "ring block is missing `char`"))?;
                let vars = vars.ok_or_else(|| err(ln, "ring block is missing `vars`"))?;
                let field = PrimeField::new(p).map_err(|e| err(ln, &e.to_string()))?;
                let mut ideal = Vec::new();
                for (ln2, src) in ideal_srcs {
                    let poly = Polynomial::parse(&src, &vars, &field)
                        .map_err(|e| err(ln2, &e.to_string()))?;
                    if !poly.is_homogeneous() {
                        return Err(err(ln2, &format!("`{src}` is not homogeneous")));
                    }
                    match poly.degree() {
                        None => return Err(err(ln2, "zero ideal generator")),
                        Some(d) if d < 2 => {
                            return Err(err(
                                ln2,
                                &format!("`{src}` has degree {d}; linear forms are not allowed"),
                            ));
                        }
                        _ => {}
                    }
                    ideal.push(poly);
                }
                ring = Some(
                    RingDescriptor::new(p, vars, ideal).map_err(|e| err(ln, &e.to_string()))?,
                );
            }
            "module" => {
                let name = rest.trim().to_string();
                if name.is_empty() {
                    return Err(err(ln, "module block needs a name"));
                }
                if name == "k" || name == "m" || name == "R" {
                    return Err(err(ln, &format!("module name `{name}` is reserved")));
                }
                let mut degrees: Option<Vec<i64>> = None;
                let mut relations: Vec<Vec<String>> = Vec::new();
                loop {
                    let Some((ln2, raw2)) = lines.next() else {
                        return Err(err(ln, "unterminated module block"));
                    };
                    let line2 = strip_comment(raw2);
                    if line2.is_empty() {
                        continue;
                    }
                    let (h2, r2) = split_head(line2);
                    match h2 {
                        "end" => break,
                        "degrees" => {
                            let ds: std::result::Result<Vec<i64>, _> =
                                r2.split(',').map(|s| s.trim().parse::<i64>()).collect();
                            degrees = Some(
                                ds.map_err(|_| err(ln2, "degrees expects integers"))?,
                            );
                        }
                        "relation" => {
                            let entries: Vec<String> =
                                r2.split(',').map(|s| s.trim().to_string()).collect();
                            relations.push(entries);
                        }
                        other => {
                            return Err(err(ln2, &format!("unknown module field `{other}`")));
                        }
                    }
                }
                let degrees =
                    degrees.ok_or_else(|| err(ln, "module block is missing `degrees`"))?;
                raw_modules.push((name, degrees, relations, ln));
            }
            other => {
                return Err(err(ln, &format!("unknown block `{other}`")));
            }
        }
    }

    let ring = ring.ok_or_else(|| CliError::Parse {
        line: 0,
        message: "workspace has no ring block".to_string(),
    })?;

    let mut modules = BTreeMap::new();
    for (name, degrees, relations, ln) in raw_modules {
        let module = build_module(&ring, &degrees, &relations, ln)?;
        modules.insert(name, module);
    }
    Ok(Workspace { ring, modules })
}

fn build_module(
    ring: &RingDescriptor,
    degrees: &[i64],
    relations: &[Vec<String>],
    ln: usize,
) -> Result<PresentedModule> {
    let rank = degrees.len();
    let field = *ring.field();
    let mut cols: Vec<ModuleElement> = Vec::new();
    for entries in relations {
        if entries.len() != rank {
            return Err(err(
                ln,
                &format!(
                    "relation has {} entries but the module has {rank} generators",
                    entries.len()
                ),
            ));
        }
        let polys: Result<Vec<Polynomial>> = entries
            .iter()
            .map(|src| {
                Polynomial::parse(src, ring.vars(), &field).map_err(|e| err(ln, &e.to_string()))
            })
            .collect();
        let col = ModuleElement::from_components(polys?);
        if !col.is_homogeneous(degrees) {
            return Err(err(
                ln,
                "relation column is not homogeneous against the generator degrees",
            ));
        }
        cols.push(col);
    }
    let target = TwistedFreeModule::new(degrees.to_vec());
    let map = torsion_core::map_from_columns(ring, &target, &cols);
    PresentedModule::new(ring.clone(), map).map_err(|e| err(ln, &e.to_string()))
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

fn split_head(line: &str) -> (&str, &str) {
    match line.find(char::is_whitespace) {
        Some(i) => (&line[..i], &line[i..]),
        None => (line, ""),
    }
}

fn err(line: usize, message: &str) -> CliError {
    CliError::Parse { line: line + 1, message: message.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;

    const R1: &str = "
# the first example ring
ring
  char 32003
  vars x, y
  ideal x^2, x*y
end

module N
  degrees 0, 0
  relation x, y
end
";

    #[test]
    fn parses_ring_and_module() {
        let ws = parse_workspace(R1).unwrap();
        assert_eq!(ws.ring.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(ws.ring.ideal().len(), 2);
        let n = ws.module("N").unwrap();
        assert_eq!(n.generators().rank(), 2);
        let k = ws.module("k").unwrap();
        assert_eq!(k.generators().rank(), 1);
        assert!(ws.module("nope").is_err());
    }

    #[test]
    fn rejects_linear_forms() {
        let src = "ring\n char 32003\n vars x, y\n ideal x + y\nend\n";
        let e = parse_workspace(src).unwrap_err();
        assert!(e.to_string().contains("linear"), "{e}");
    }

    #[test]
    fn rejects_inhomogeneous_ideal() {
        let src = "ring\n char 32003\n vars x, y\n ideal x^2 + y\nend\n";
        assert!(parse_workspace(src).is_err());
    }

    #[test]
    fn rejects_composite_characteristic() {
        let src = "ring\n char 32004\n vars x, y\nend\n";
        let e = parse_workspace(src).unwrap_err();
        assert!(e.to_string().contains("prime"), "{e}");
    }

    #[test]
    fn rejects_small_characteristic() {
        let src = "ring\n char 3\n vars x, y\nend\n";
        assert!(parse_workspace(src).is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let src = "ring\n char 32003\n vars x, y\n ideal x^2\nend\n\nmodule Q\n degrees 0\n relation z\nend\n";
        match parse_workspace(src).unwrap_err() {
            CliError::Parse { line, .. } => assert!(line >= 7, "line {line}"),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
