import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="walkpy",
    version="0.1.0.dev1",
    author="walkpy developers",
    description="Exact and approximate time distributions of hitting, commute and cover times "
                "for random walks on graphs.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=("tests", "examples", "examples.*")),
    classifiers=(
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Development Status :: 2 - Pre-Alpha"
    ),
    python_requires=">=3.8",
    install_requires=['numpy>=1.17', 'scipy', 'matplotlib', 'pandas>=1.5', 'networkx'],
    extras_require={
        'test': ['pytest', 'hypothesis'],
        'doc': ['sphinx', 'numpydoc'],
    },
    entry_points={
        'console_scripts': ['walkpy = walkpy.cli:main'],
    },
)
