"""Builds the optional compiled kernels; the package works without them."""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler / no Cython: fall back to pure Python
            print(f"warning: compiled kernels not built ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} not built ({exc})")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    return cythonize(
        [Extension("structroute._kernels._ckernels",
                   ["src/structroute/_kernels/_ckernels.pyx"],
                   extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
