import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS").install()

sources = sorted(glob.glob("src/*.cpp")) + ["src/python/module.cpp"]

ext = Pybind11Extension(
    "cauchy_fdiv._cauchy_fdiv",
    sources,
    include_dirs=["include", "src", "vendor", "/usr/include/eigen3"],
    cxx_std=20,
    extra_compile_args=["-O2"],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
