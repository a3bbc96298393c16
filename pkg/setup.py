from setuptools import setup, find_packages

setup(
    name="dsl_algebra",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"dsl_algebra": ["config/*.yaml"]},
    install_requires=[
        "pandas>=2.0.0",   # For report DataFrames
        "pydantic>=2.0.0", # For settings, cache records and reports
        "pyyaml>=6.0",     # For YAML configuration
        "rich>=13.0.0",    # For terminal tables and the log handler
        "sympy>=1.12",     # For exact DomainMatrix linear algebra over QQ and Poly
    ],
    extras_require={
        "test": ["pytest>=7.0"],
    },
    entry_points={
        "console_scripts": [
            "dsl-algebra=dsl_algebra.cli:main",
        ],
    },
    python_requires=">=3.8",
    description="Exact rational computations for double shuffle, inertia and Kashiwara-Vergne checks",
)
