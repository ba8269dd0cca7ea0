use pyo3::prelude::*;

#[pymodule]
fn exoplan(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
