"""Known-good approximant values for the built-in moment families.

Each table maps n to (exact value or None, decimal rendering). Decimal
strings carry 10 fractional digits for the gamma/gompertz families and 9
for the zeta families; rows where the exact value grew too large to keep
hold None.
"""

GAMMA_ROWS = {
    0: ("9/41", "0.2195121951"),
    1: ("627726506/2084484569", "0.3011423137"),
    2: (None, "0.3457225856"),
    3: (None, "0.3745360864"),
    4: (None, "0.3950172588"),
    5: (None, "0.4104941483"),
    6: (None, "0.4226993663"),
    7: (None, "0.4326321010"),
    8: (None, "0.4409129928"),
    9: (None, "0.4479499436"),
    10: (None, "0.4540232182"),
    11: (None, "0.4593324215"),
    12: (None, "0.4640239850"),
    13: (None, "0.4682080352"),
    14: (None, "0.4719691667"),
    15: (None, "0.4753735569"),
    17: (None, "0.4813123036"),
    19: (None, "0.4863363761"),
    21: (None, "0.4906573284"),
    23: (None, "0.4944242261"),
    25: (None, "0.4977454856"),
}

GOMPERTZ_ROWS = {
    0: ("1/2", "0.5000000000"),
    1: ("4/7", "0.5714285714"),
    2: ("10/17", "0.5882352941"),
    3: ("124/209", "0.5933014354"),
    4: ("460/773", "0.5950840880"),
    5: ("7940/13327", "0.5957829969"),
    6: ("39020/65461", "0.5960801088"),
    7: ("859580/1441729", "0.5962146839"),
    8: ("748420/1255151", "0.5962788541"),
    9: ("139931620/234662231", "0.5963107885"),
    10: ("1015353820/1702678841", "0.5963272671"),
    11: ("31805257340/53334454417", "0.5963360400"),
    12: ("267257395340/448162154317", "0.5963408395"),
    13: ("9591325648580/16083557845279", "0.5963435293"),
    14: ("8317039567460/13946689584823", "0.5963450693"),
    15: ("75451991521660/126523856174033", "0.5963459683"),
    17: ("160957871380291180/269906478537389909", "0.5963468245"),
    19: ("60588676286095139260/101599675414361566913", "0.5963471442"),
    21: ("714785218276618032951940/1198605668577020653881647", "0.5963472700"),
    23: (None, "0.5963473218"),
    25: (None, "0.5963473439"),
}

ZETA2_ROWS = {
    0: ("4/3", "1.333333333"),
    1: ("135/89", "1.516853933"),
    2: ("505319/320733", "1.575512966"),
    3: ("1337517425/835187004", "1.601458618"),
    4: ("26920197674520019/16667096529827700", "1.615170202"),
    5: ("4108034695656989506227/2530690380879633004100", "1.623286170"),
    6: (None, "1.628483935"),
    7: (None, "1.632011765"),
    8: (None, "1.634515372"),
    9: (None, "1.636356043"),
    10: (None, "1.637748743"),
    11: (None, "1.638827873"),
    12: (None, "1.639680964"),
    13: (None, "1.640367005"),
    14: (None, "1.640926928"),
    15: (None, "1.641389854"),
    17: (None, "1.642103939"),
    19: (None, "1.642622098"),
    21: (None, "1.643009963"),
    23: (None, "1.643307821"),
    25: (None, "1.643541511"),
}

ZETA3_ROWS = {
    0: ("8/7", "1.142857143"),
    1: ("4887/4105", "1.190499391"),
    2: ("13305034871/11102509809", "1.198380826"),
    3: ("2196507603137550625/1829598054203124216", "1.200541069"),
    4: (None, "1.201321520"),
    5: (None, "1.201657975"),
    6: (None, "1.201822087"),
    7: (None, "1.201909799"),
    8: (None, "1.201960105"),
    9: (None, "1.201990623"),
    10: (None, "1.202010004"),
    11: (None, "1.202022790"),
    12: (None, "1.202031499"),
    13: (None, "1.202037598"),
    14: (None, "1.202041971"),
    15: (None, "1.202045173"),
    17: (None, "1.202049371"),
    19: (None, "1.202051847"),
    21: (None, "1.202053385"),
    23: (None, "1.202054380"),
    25: (None, "1.202055046"),
}

# Target constants, as decimal strings (same precision as the rows above).
REFERENCE_DECIMALS = {
    "gamma": "0.5772156649",
    "gompertz": "0.5963473623",
    ("zeta", 2): "1.644934067",
    ("zeta", 3): "1.202056903",
}
