# Import setuptools
from setuptools import setup, find_packages

optional_dependencies = {
    "testing": ["testflo>=1.4.7"],
    "docs": ["sphinx"],
    "mpi": ["mpi4py>=3.1.1"],
}

# Add an optional dependency that concatenates all others
optional_dependencies["all"] = sorted(
    [
        dependency
        for dependencies in optional_dependencies.values()
        for dependency in dependencies
    ]
)

setup(
    name="hstnbeam",
    version="0.1.0",
    description="Beamforming for spectrum-sharing hybrid satellite-terrestrial networks with nonlinear power amplifiers",
    author="hstnbeam developers",
    extras_require=optional_dependencies,
    install_requires=["numpy", "scipy"],
    packages=find_packages(include=["hstnbeam*"]),
    entry_points={"console_scripts": ["hstnbeam = hstnbeam.interface.cli:main"]},
)
