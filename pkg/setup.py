"""Build the optional compiled kernel. The package works without it: the
bitset kernels in endim._kernels fall back to a pure-Python implementation
when the extension is absent (see benchmarks/bench_kernels.py for the
speed comparison)."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "endim._ckernels",
                ["src/endim/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
