from setuptools import setup

_springerk_version = '0.3.0'

install_requires=[
    'jinja2',
    'docopt',
    'networkx'
    ]

tests_require=[
    'pytest',
    'mock',
    'hypothesis'
    ]

setup(
    name='springerk',
    version=_springerk_version,
    description='Springer fiber component membership for hook, two-row and two-column shapes',
    long_description='',
    url='https://github.com/springerk/springerk',
    author='The springerk developers',
    author_email='springerk-dev@lists.sourceforge.net',
    license='GNU General Public License v2 or later (GPLv2+)',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU General Public License v2 or later (GPLv2+)',
        'Programming Language :: Python :: 3',
        'Environment :: Console',
        ],

    keywords='springer fiber young tableaux jeu de taquin meander',
    packages=['springerk', 'springerk.criteria'],
    install_requires=install_requires,
    tests_require=tests_require,
    extras_require={
        'tests': install_requires + tests_require,
        },
    package_data={'springerk': ['templates/*']},

    entry_points={'console_scripts': ['springerk=springerk.springerk:main']},
    test_suite='py.test',

    zip_safe=False,
)
