//! Resolution of `--group`, `--algebra`, `--hopf`, `--smatrix` and field flags.
//! An argument naming an existing file is read as a file; otherwise it is a
//! built-in name.

use std::path::Path;

use verlinde_core::algebra::AlgebraRef;
use verlinde_core::catalog::{default_field, double_by_name, frobenius_by_name, group_by_name};
use verlinde_core::doubles::{drinfeld_double, DrinfeldDouble};
use verlinde_core::frobenius::FrobeniusAlgebra;
use verlinde_core::io::{parse_algebra, parse_group, parse_hopf, parse_smatrix, HopfData};
use verlinde_core::{Error, Field, FieldSpec, FiniteGroup, Matrix, StructureAlgebra};

use crate::{Failure, Inputs};

pub type Res<T> = std::result::Result<T, Failure>;

fn read_file(arg: &str) -> Option<Res<String>> {
    let path = Path::new(arg);
    if !path.is_file() {
        return None;
    }
    Some(std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{arg}: {e}"))))
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Res<&'a str> {
    value.as_deref().ok_or_else(|| Failure::Usage(format!("this command needs --{flag}")))
}

pub enum Algebra {
    Frobenius(FrobeniusAlgebra),
    Plain(StructureAlgebra),
}

impl Inputs {
    /// The explicit field, if `--field` or a nonzero `--char` was given.
    pub fn explicit_field(&self) -> Res<Option<Field>> {
        if let Some(spec) = &self.field {
            return Ok(Some(Field::new(spec.parse::<FieldSpec>()?)?));
        }
        match self.characteristic {
            None | Some(0) => Ok(None),
            Some(p) => Ok(Some(Field::new(FieldSpec::Prime(p))?)),
        }
    }

    pub fn group(&self) -> Res<FiniteGroup> {
        let arg = required(&self.group, "group")?;
        match read_file(arg) {
            Some(text) => {
                let name = Path::new(arg).file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
                Ok(parse_group(&text?, name)?)
            }
            None => Ok(group_by_name(arg)?),
        }
    }

    pub fn group_field(&self, g: &FiniteGroup) -> Res<Field> {
        Ok(self.explicit_field()?.unwrap_or_else(|| default_field(g)))
    }

    /// `D(G)` from `--group` and the field flags, or a built-in double via `--algebra`.
    pub fn double(&self) -> Res<DrinfeldDouble> {
        if self.group.is_none() {
            if let Some(name) = &self.algebra {
                return Ok(double_by_name(name)?);
            }
        }
        let g = self.group()?;
        let f = self.group_field(&g)?;
        Ok(drinfeld_double(&g, &f)?)
    }

    pub fn algebra(&self) -> Res<Algebra> {
        let arg = required(&self.algebra, "algebra")?;
        match read_file(arg) {
            Some(text) => {
                let (alg, form) = parse_algebra(&text?)?;
                match form {
                    Some(form) => Ok(Algebra::Frobenius(FrobeniusAlgebra::from_algebra(alg, form)?)),
                    None => Ok(Algebra::Plain(alg)),
                }
            }
            None => Ok(Algebra::Frobenius(frobenius_by_name(arg, self.explicit_field()?.as_ref())?)),
        }
    }

    pub fn frobenius(&self) -> Res<FrobeniusAlgebra> {
        match self.algebra()? {
            Algebra::Frobenius(a) => Ok(a),
            Algebra::Plain(_) => Err(Error::Invalid("algebra file has no `form` line; this command needs a Frobenius form".into()).into()),
        }
    }

    pub fn structure_algebra(&self) -> Res<AlgebraRef> {
        match self.algebra()? {
            Algebra::Frobenius(a) => Ok(a.algebra().clone()),
            Algebra::Plain(a) => Ok(a.into_ref()),
        }
    }

    pub fn hopf(&self) -> Res<Option<HopfData>> {
        let Some(arg) = &self.hopf else { return Ok(None) };
        let text = read_file(arg).ok_or_else(|| Failure::Io(format!("{arg}: no such file")))??;
        Ok(Some(parse_hopf(&text)?))
    }

    pub fn smatrix(&self) -> Res<Option<Matrix>> {
        let Some(arg) = &self.smatrix else { return Ok(None) };
        let text = read_file(arg).ok_or_else(|| Failure::Io(format!("{arg}: no such file")))??;
        Ok(Some(parse_smatrix(&text)?))
    }

    pub fn degree_bound(&self) -> usize {
        self.degree.unwrap_or(verlinde_core::hochschild::DEFAULT_DEGREE_BOUND)
    }
}
