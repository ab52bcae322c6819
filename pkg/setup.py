from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: the package runs on the pure-Python kernel fallback.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "iout_wakeup._kernels",
                ["src/iout_wakeup/_kernels.pyx"],
                # -ffp-contract=off keeps the compiled kernels bit-identical
                # to the pure-Python fallback (no FMA reassociation).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
