use pyo3::prelude::*;

#[pymodule]
fn lyapdegen_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
