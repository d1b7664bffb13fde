import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

ext_modules = []
cmdclass = {}

if os.environ.get("LEGDET_NO_NATIVE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("legdet._native", ["src/legdet/_native.pyx"])],
            compiler_directives={"language_level": "3"},
        )

        class OptionalBuildExt(build_ext):
            """Build the accelerator if possible; the pure-Python kernel covers failure."""

            def run(self):
                try:
                    super().run()
                except Exception as exc:  # compiler missing, etc.
                    print(f"warning: native kernel not built ({exc}); using pure-Python fallback")

            def build_extension(self, ext):
                try:
                    super().build_extension(ext)
                except Exception as exc:
                    print(f"warning: {ext.name} not built ({exc}); using pure-Python fallback")

        cmdclass["build_ext"] = OptionalBuildExt
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass=cmdclass)
