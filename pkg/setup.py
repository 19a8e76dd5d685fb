# Builds circspec._kernels when Cython and a C compiler are available;
# otherwise the package installs pure-Python and uses circspec._fallback.
#   python setup.py build_ext --inplace
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("circspec._kernels", ["src/circspec/_kernels.pyx"],
                   include_dirs=[np.get_include()],
                   extra_compile_args=["-O3"],
                   define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")])],
        compiler_directives={"language_level": "3"},
    )
except ImportError as exc:
    print(f"circspec: building without compiled kernels ({exc})", file=sys.stderr)


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"circspec: compiled kernels skipped ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"circspec: compiled kernels skipped ({exc})", file=sys.stderr)


setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
