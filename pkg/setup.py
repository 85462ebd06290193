from pathlib import Path

from setuptools import setup, find_packages

this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()

setup(
    name="alphametric",
    version="0.1.0",
    license='MIT',
    packages=find_packages(exclude=["tests", "tests.*"]),
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords='graph metric, gromov hyperbolicity, alpha_i-metric, injective hull, dismantling',
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.21.5",
        "terminaltables==3.1.10",
        "python-dotenv",
        "networkx>=2.6",
        "scipy>=1.7",
        "tqdm>=4.62",
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["alphametric = alphametric.cli:main"],
    },
)
