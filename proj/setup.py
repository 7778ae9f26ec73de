from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "cubecover._cubecover",
        sources=[
            "src/subcube.cpp",
            "src/covering.cpp",
            "src/polychromatic.cpp",
            "src/bounds.cpp",
            "src/solver.cpp",
            "python/bindings.cpp",
        ],
        include_dirs=["include"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
