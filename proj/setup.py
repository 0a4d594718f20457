from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

root = Path(__file__).parent
core = sorted(str(p.relative_to(root)) for p in (root / "src").glob("*.cpp"))

setup(
    ext_modules=[
        Pybind11Extension(
            "pairsplit._core",
            ["bindings/module.cpp", *core],
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
