from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "qpartstat._qps",
    sources=[
        "bindings/module.cpp",
        "src/zpoly.cpp",
        "src/series.cpp",
        "src/partitions.cpp",
        "src/qexpr.cpp",
        "src/verify.cpp",
        "src/registry.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
