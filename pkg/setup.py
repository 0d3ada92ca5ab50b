from setuptools import setup
from setuptools import find_packages

setup(
    name='torus_unknot',
    version='0.0.0',
    packages=find_packages(exclude=('tests', 'notebooks')),
    url='',
    license='',
    description='Unknotting crossing data of torus knots and links, with '
                'braid word certificates and invariant checks',
    install_requires=[
        'paderbox',
        'tqdm',
        'cached_property',
        'numpy',
        'sympy',
        'svgwrite',
        'click',
        'dlp_mpi'
    ],
    entry_points={
        'console_scripts': [
            'torus-unknot=torus_unknot.cli:cli',
        ],
    },
)
