//! Browser bindings. Every export takes the case name and a comma-separated
//! partition and returns a JSON string, or throws the error message.

use unipotent::packet::bv_packet;
use unipotent::{json, Case, Family, Orbit, Partition, Symbol};
use wasm_bindgen::prelude::*;

fn parse(case: &str, partition: &str) -> Result<(Case, Partition), String> {
    let case: Case = case.trim().parse().map_err(|e: unipotent::Error| e.to_string())?;
    let partition: Partition = partition.trim().parse().map_err(|e: unipotent::Error| e.to_string())?;
    Ok((case, partition))
}

/// An orbit on either side of the duality: odd totals are orthogonal for
/// Cn and Bn, everything else symplectic, and Dn is always even orthogonal.
fn any_orbit(case: Case, p: Partition) -> Result<Orbit, String> {
    let family = match case {
        Case::Dn => Family::SoEven,
        Case::Cn | Case::Bn if p.total() % 2 == 1 => Family::SoOdd,
        _ => Family::Sp,
    };
    Orbit::new(family, p, None).map_err(|e| e.to_string())
}

fn dual_side(case: Case, p: Partition) -> Result<Orbit, String> {
    Orbit::new(case.dual_family(), p, None).map_err(|e| e.to_string())
}

pub fn dual_json(case: &str, partition: &str) -> Result<String, String> {
    let (case, p) = parse(case, partition)?;
    let o = any_orbit(case, p)?;
    let d = o.dual(case).map_err(|e| e.to_string())?;
    Ok(json::orbit(&d).to_string())
}

pub fn symbol_json(case: &str, partition: &str) -> Result<String, String> {
    let (case, p) = parse(case, partition)?;
    let o = dual_side(case, p)?;
    let s = Symbol::of(&o, case).map_err(|e| e.to_string())?;
    Ok(json::symbol(&s).to_string())
}

pub fn packet_json(case: &str, partition: &str) -> Result<String, String> {
    let (case, p) = parse(case, partition)?;
    let o = dual_side(case, p)?;
    let members = bv_packet(&o, case).map_err(|e| e.to_string())?;
    Ok(json::packet(&o, case, &members).to_string())
}

#[wasm_bindgen]
pub fn dual(case: &str, partition: &str) -> Result<String, JsError> {
    dual_json(case, partition).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn symbol(case: &str, partition: &str) -> Result<String, JsError> {
    symbol_json(case, partition).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn packet(case: &str, partition: &str) -> Result<String, JsError> {
    packet_json(case, partition).map_err(|e| JsError::new(&e))
}
