from propagator.matrices import KernelMatrix
from scenario.params import csv_max_points
from pathlib import Path
import numpy as np
import tempfile
import json
import os


def complex_entry(value: complex) -> dict:
    value = complex(value)
    return {"re": value.real, "im": value.imag, "abs": abs(value),
            "phase": float(np.angle(value))}


def _atomic(path: Path, write):
    """Writes to a temporary file next to path, then renames it over path."""
    path = Path(path)
    fd, temp_name = tempfile.mkstemp(prefix="." + path.name, suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", newline="\n") as temp_file:
            write(temp_file)
        os.replace(temp_name, path)
    except BaseException:
        if os.path.exists(temp_name):
            os.remove(temp_name)
        raise


def write_json(path, report: dict):
    text = json.dumps(report, indent=2, sort_keys=True, allow_nan=False)
    _atomic(path, lambda f: f.write(text + "\n"))


def kernel_rows(zigzag: KernelMatrix, direct: KernelMatrix):
    """
    The sampled kernels as rows (q_out, q_in, re_zigzag, im_zigzag, re_direct, im_direct),
    taking every stride-th grid point so that at most csv_max_points remain along each axis.
    """
    grid = zigzag.grid
    stride = max(1, int(np.ceil(grid.n / csv_max_points)))
    index = np.arange(0, grid.n, stride)
    q = grid.points[index]
    q_out, q_in = np.meshgrid(q, q, indexing="ij")
    z = zigzag.entries[np.ix_(index, index)]
    d = direct.entries[np.ix_(index, index)]
    columns = [q_out, q_in, z.real, z.imag, d.real, d.imag]
    return np.stack([c.ravel() for c in columns], axis=1)


def write_kernels_csv(path, zigzag: KernelMatrix, direct: KernelMatrix):
    rows = kernel_rows(zigzag, direct)
    header = "q_out,q_in,re_zigzag,im_zigzag,re_direct,im_direct"
    _atomic(path, lambda f: np.savetxt(f, rows, fmt="%.17g", delimiter=",", header=header,
                                       comments=""))
