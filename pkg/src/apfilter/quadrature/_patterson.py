"""Gauss-Patterson nodes and weights on (-1, 1), levels 0..7.

Generated by tools/generate_patterson.py; do not edit by hand.
"""

NODES = (
    (
        0.0,
    ),
    (
        -0.7745966692414834,
        0.0,
        0.7745966692414834,
    ),
    (
        -0.9604912687080203,
        -0.7745966692414834,
        -0.43424374934680254,
        0.0,
        0.43424374934680254,
        0.7745966692414834,
        0.9604912687080203,
    ),
    (
        -0.993831963212755,
        -0.9604912687080203,
        -0.888459232872257,
        -0.7745966692414834,
        -0.6211029467372264,
        -0.43424374934680254,
        -0.2233866864289669,
        0.0,
        0.2233866864289669,
        0.43424374934680254,
        0.6211029467372264,
        0.7745966692414834,
        0.888459232872257,
        0.9604912687080203,
        0.993831963212755,
    ),
    (
        -0.9990981249676676,
        -0.993831963212755,
        -0.9815311495537401,
        -0.9604912687080203,
        -0.9296548574297401,
        -0.888459232872257,
        -0.8367259381688688,
        -0.7745966692414834,
        -0.7024962064915271,
        -0.6211029467372264,
        -0.5313197436443756,
        -0.43424374934680254,
        -0.3311353932579768,
        -0.2233866864289669,
        -0.11248894313318662,
        0.0,
        0.11248894313318662,
        0.2233866864289669,
        0.3311353932579768,
        0.43424374934680254,
        0.5313197436443756,
        0.6211029467372264,
        0.7024962064915271,
        0.7745966692414834,
        0.8367259381688688,
        0.888459232872257,
        0.9296548574297401,
        0.9604912687080203,
        0.9815311495537401,
        0.993831963212755,
        0.9990981249676676,
    ),
    (
        -0.9998728881203576,
        -0.9990981249676676,
        -0.997206259372222,
        -0.993831963212755,
        -0.9886847575474295,
        -0.9815311495537401,
        -0.9721828747485818,
        -0.9604912687080203,
        -0.9463428583734029,
        -0.9296548574297401,
        -0.9103711569570043,
        -0.888459232872257,
        -0.8639079381936905,
        -0.8367259381688688,
        -0.8069405319502176,
        -0.7745966692414834,
        -0.7397560443526947,
        -0.7024962064915271,
        -0.6629096600247806,
        -0.6211029467372264,
        -0.5771957100520458,
        -0.5313197436443756,
        -0.48361802694584105,
        -0.43424374934680254,
        -0.38335932419873037,
        -0.3311353932579768,
        -0.2777498220218243,
        -0.2233866864289669,
        -0.16823525155220748,
        -0.11248894313318662,
        -0.05634431304659279,
        0.0,
        0.05634431304659279,
        0.11248894313318662,
        0.16823525155220748,
        0.2233866864289669,
        0.2777498220218243,
        0.3311353932579768,
        0.38335932419873037,
        0.43424374934680254,
        0.48361802694584105,
        0.5313197436443756,
        0.5771957100520458,
        0.6211029467372264,
        0.6629096600247806,
        0.7024962064915271,
        0.7397560443526947,
        0.7745966692414834,
        0.8069405319502176,
        0.8367259381688688,
        0.8639079381936905,
        0.888459232872257,
        0.9103711569570043,
        0.9296548574297401,
        0.9463428583734029,
        0.9604912687080203,
        0.9721828747485818,
        0.9815311495537401,
        0.9886847575474295,
        0.993831963212755,
        0.997206259372222,
        0.9990981249676676,
        0.9998728881203576,
    ),
    (
        -0.9999824303548916,
        -0.9998728881203576,
        -0.9995987996719107,
        -0.9990981249676676,
        -0.9983166353184074,
        -0.997206259372222,
        -0.9957241046984072,
        -0.993831963212755,
        -0.9914957211781061,
        -0.9886847575474295,
        -0.9853714995985203,
        -0.9815311495537401,
        -0.9771415146397057,
        -0.9721828747485818,
        -0.9666378515584165,
        -0.9604912687080203,
        -0.9537300064257611,
        -0.9463428583734029,
        -0.9383203977795929,
        -0.9296548574297401,
        -0.9203400254700124,
        -0.9103711569570043,
        -0.89974489977694,
        -0.888459232872257,
        -0.8765134144847053,
        -0.8639079381936905,
        -0.8506444947683502,
        -0.8367259381688688,
        -0.8221562543649804,
        -0.8069405319502176,
        -0.7910849337998483,
        -0.7745966692414834,
        -0.7574839663805136,
        -0.7397560443526947,
        -0.7214230853700989,
        -0.7024962064915271,
        -0.6829874310910792,
        -0.6629096600247806,
        -0.6422766425097595,
        -0.6211029467372264,
        -0.5994039302422429,
        -0.5771957100520458,
        -0.5544951326319325,
        -0.5313197436443756,
        -0.5076877575337166,
        -0.48361802694584105,
        -0.45913001198983233,
        -0.43424374934680254,
        -0.4089798212298887,
        -0.38335932419873037,
        -0.3574038378315322,
        -0.3311353932579768,
        -0.30457644155671404,
        -0.2777498220218243,
        -0.2506787303034832,
        -0.2233866864289669,
        -0.19589750271110015,
        -0.16823525155220748,
        -0.14042423315256017,
        -0.11248894313318662,
        -0.08445404008371088,
        -0.05634431304659279,
        -0.028184648949745695,
        0.0,
        0.028184648949745695,
        0.05634431304659279,
        0.08445404008371088,
        0.11248894313318662,
        0.14042423315256017,
        0.16823525155220748,
        0.19589750271110015,
        0.2233866864289669,
        0.2506787303034832,
        0.2777498220218243,
        0.30457644155671404,
        0.3311353932579768,
        0.3574038378315322,
        0.38335932419873037,
        0.4089798212298887,
        0.43424374934680254,
        0.45913001198983233,
        0.48361802694584105,
        0.5076877575337166,
        0.5313197436443756,
        0.5544951326319325,
        0.5771957100520458,
        0.5994039302422429,
        0.6211029467372264,
        0.6422766425097595,
        0.6629096600247806,
        0.6829874310910792,
        0.7024962064915271,
        0.7214230853700989,
        0.7397560443526947,
        0.7574839663805136,
        0.7745966692414834,
        0.7910849337998483,
        0.8069405319502176,
        0.8221562543649804,
        0.8367259381688688,
        0.8506444947683502,
        0.8639079381936905,
        0.8765134144847053,
        0.888459232872257,
        0.89974489977694,
        0.9103711569570043,
        0.9203400254700124,
        0.9296548574297401,
        0.9383203977795929,
        0.9463428583734029,
        0.9537300064257611,
        0.9604912687080203,
        0.9666378515584165,
        0.9721828747485818,
        0.9771415146397057,
        0.9815311495537401,
        0.9853714995985203,
        0.9886847575474295,
        0.9914957211781061,
        0.993831963212755,
        0.9957241046984072,
        0.997206259372222,
        0.9983166353184074,
        0.9990981249676676,
        0.9995987996719107,
        0.9998728881203576,
        0.9999824303548916,
    ),
    (
        -0.9999975963797485,
        -0.9999824303548916,
        -0.9999439962070544,
        -0.9998728881203576,
        -0.9997604909244321,
        -0.9995987996719107,
        -0.9993803380250236,
        -0.9990981249676676,
        -0.9987456144680951,
        -0.9983166353184074,
        -0.9978053544959573,
        -0.997206259372222,
        -0.9965141459148903,
        -0.9957241046984072,
        -0.994831502800621,
        -0.993831963212755,
        -0.9927213442827886,
        -0.9914957211781061,
        -0.9901513704007702,
        -0.9886847575474295,
        -0.987092527954034,
        -0.9853714995985203,
        -0.9835186575786328,
        -0.9815311495537401,
        -0.9794062816708626,
        -0.9771415146397057,
        -0.9747344597524027,
        -0.9721828747485818,
        -0.9694846595024592,
        -0.9666378515584165,
        -0.9636406215698121,
        -0.9604912687080203,
        -0.9571882161098609,
        -0.9537300064257611,
        -0.9501152975212949,
        -0.9463428583734029,
        -0.942411565191083,
        -0.9383203977795929,
        -0.9340684361577258,
        -0.9296548574297401,
        -0.9250789329070757,
        -0.9203400254700124,
        -0.9154375871557651,
        -0.9103711569570043,
        -0.9051403588132616,
        -0.89974489977694,
        -0.894184568335559,
        -0.888459232872257,
        -0.882568840247342,
        -0.8765134144847053,
        -0.8702930555481139,
        -0.8639079381936905,
        -0.8573583108862322,
        -0.8506444947683502,
        -0.8437668826727086,
        -0.8367259381688688,
        -0.8295221946374014,
        -0.8221562543649804,
        -0.8146287876551375,
        -0.8069405319502176,
        -0.7990922909608414,
        -0.7910849337998483,
        -0.782919394118283,
        -0.7745966692414834,
        -0.7661178193037601,
        -0.7574839663805136,
        -0.7486962936169366,
        -0.7397560443526947,
        -0.7306645212421813,
        -0.7214230853700989,
        -0.712033155362252,
        -0.7024962064915271,
        -0.6928137697791147,
        -0.6829874310910792,
        -0.6730188302304185,
        -0.6629096600247806,
        -0.6526616654100175,
        -0.6422766425097595,
        -0.6317564377111943,
        -0.6211029467372264,
        -0.6103181137151864,
        -0.5994039302422429,
        -0.5883624344476626,
        -0.5771957100520458,
        -0.5659058854236544,
        -0.5544951326319325,
        -0.5429656664983115,
        -0.5313197436443756,
        -0.519559661537457,
        -0.5076877575337166,
        -0.49570640791876147,
        -0.48361802694584105,
        -0.4714250658716589,
        -0.45913001198983233,
        -0.44673538766202847,
        -0.43424374934680254,
        -0.4216576866261633,
        -0.4089798212298887,
        -0.39621280605761594,
        -0.38335932419873037,
        -0.37042208795007825,
        -0.3574038378315322,
        -0.34430734159943804,
        -0.3311353932579768,
        -0.3178908120684767,
        -0.30457644155671404,
        -0.2911951485182467,
        -0.2777498220218243,
        -0.26424337241092677,
        -0.2506787303034832,
        -0.23705884558982973,
        -0.2233866864289669,
        -0.2096652382431812,
        -0.19589750271110015,
        -0.1820864967592522,
        -0.16823525155220748,
        -0.1543468114813781,
        -0.14042423315256017,
        -0.12647058437230196,
        -0.11248894313318662,
        -0.0984823965981192,
        -0.08445404008371088,
        -0.07040697604285517,
        -0.05634431304659279,
        -0.042269164765363604,
        -0.028184648949745695,
        -0.014093886410782462,
        0.0,
        0.014093886410782462,
        0.028184648949745695,
        0.042269164765363604,
        0.05634431304659279,
        0.07040697604285517,
        0.08445404008371088,
        0.0984823965981192,
        0.11248894313318662,
        0.12647058437230196,
        0.14042423315256017,
        0.1543468114813781,
        0.16823525155220748,
        0.1820864967592522,
        0.19589750271110015,
        0.2096652382431812,
        0.2233866864289669,
        0.23705884558982973,
        0.2506787303034832,
        0.26424337241092677,
        0.2777498220218243,
        0.2911951485182467,
        0.30457644155671404,
        0.3178908120684767,
        0.3311353932579768,
        0.34430734159943804,
        0.3574038378315322,
        0.37042208795007825,
        0.38335932419873037,
        0.39621280605761594,
        0.4089798212298887,
        0.4216576866261633,
        0.43424374934680254,
        0.44673538766202847,
        0.45913001198983233,
        0.4714250658716589,
        0.48361802694584105,
        0.49570640791876147,
        0.5076877575337166,
        0.519559661537457,
        0.5313197436443756,
        0.5429656664983115,
        0.5544951326319325,
        0.5659058854236544,
        0.5771957100520458,
        0.5883624344476626,
        0.5994039302422429,
        0.6103181137151864,
        0.6211029467372264,
        0.6317564377111943,
        0.6422766425097595,
        0.6526616654100175,
        0.6629096600247806,
        0.6730188302304185,
        0.6829874310910792,
        0.6928137697791147,
        0.7024962064915271,
        0.712033155362252,
        0.7214230853700989,
        0.7306645212421813,
        0.7397560443526947,
        0.7486962936169366,
        0.7574839663805136,
        0.7661178193037601,
        0.7745966692414834,
        0.782919394118283,
        0.7910849337998483,
        0.7990922909608414,
        0.8069405319502176,
        0.8146287876551375,
        0.8221562543649804,
        0.8295221946374014,
        0.8367259381688688,
        0.8437668826727086,
        0.8506444947683502,
        0.8573583108862322,
        0.8639079381936905,
        0.8702930555481139,
        0.8765134144847053,
        0.882568840247342,
        0.888459232872257,
        0.894184568335559,
        0.89974489977694,
        0.9051403588132616,
        0.9103711569570043,
        0.9154375871557651,
        0.9203400254700124,
        0.9250789329070757,
        0.9296548574297401,
        0.9340684361577258,
        0.9383203977795929,
        0.942411565191083,
        0.9463428583734029,
        0.9501152975212949,
        0.9537300064257611,
        0.9571882161098609,
        0.9604912687080203,
        0.9636406215698121,
        0.9666378515584165,
        0.9694846595024592,
        0.9721828747485818,
        0.9747344597524027,
        0.9771415146397057,
        0.9794062816708626,
        0.9815311495537401,
        0.9835186575786328,
        0.9853714995985203,
        0.987092527954034,
        0.9886847575474295,
        0.9901513704007702,
        0.9914957211781061,
        0.9927213442827886,
        0.993831963212755,
        0.994831502800621,
        0.9957241046984072,
        0.9965141459148903,
        0.997206259372222,
        0.9978053544959573,
        0.9983166353184074,
        0.9987456144680951,
        0.9990981249676676,
        0.9993803380250236,
        0.9995987996719107,
        0.9997604909244321,
        0.9998728881203576,
        0.9999439962070544,
        0.9999824303548916,
        0.9999975963797485,
    ),
)

WEIGHTS = (
    (
        2.0,
    ),
    (
        0.5555555555555556,
        0.8888888888888888,
        0.5555555555555556,
    ),
    (
        0.10465622602646726,
        0.26848808986833345,
        0.40139741477596225,
        0.45091653865847414,
        0.40139741477596225,
        0.26848808986833345,
        0.10465622602646726,
    ),
    (
        0.01700171962994026,
        0.05160328299707974,
        0.09292719531512454,
        0.13441525524378423,
        0.1715119091363914,
        0.20062852937698902,
        0.2191568584015875,
        0.2255104997982067,
        0.2191568584015875,
        0.20062852937698902,
        0.1715119091363914,
        0.13441525524378423,
        0.09292719531512454,
        0.05160328299707974,
        0.01700171962994026,
    ),
    (
        0.0025447807915618746,
        0.008434565739321106,
        0.01644604985438781,
        0.025807598096176654,
        0.03595710330712932,
        0.04646289326175799,
        0.05697950949412336,
        0.0672077542959907,
        0.07687962049900353,
        0.08575592004999034,
        0.09362710998126447,
        0.10031427861179558,
        0.1056698935802348,
        0.10957842105592464,
        0.11195687302095346,
        0.11275525672076869,
        0.11195687302095346,
        0.10957842105592464,
        0.1056698935802348,
        0.10031427861179558,
        0.09362710998126447,
        0.08575592004999034,
        0.07687962049900353,
        0.0672077542959907,
        0.05697950949412336,
        0.04646289326175799,
        0.03595710330712932,
        0.025807598096176654,
        0.01644604985438781,
        0.008434565739321106,
        0.0025447807915618746,
    ),
    (
        0.00036322148184553065,
        0.001265156556230068,
        0.0025790497946856883,
        0.004217630441558855,
        0.006115506822117246,
        0.00822300795723593,
        0.010498246909621322,
        0.012903800100351265,
        0.015406750466559498,
        0.01797855156812827,
        0.02059423391591271,
        0.02323144663991027,
        0.025869679327214748,
        0.02848975474583355,
        0.031073551111687966,
        0.03360387714820773,
        0.03606443278078257,
        0.03843981024945553,
        0.04071551011694432,
        0.04287796002500773,
        0.0449145316536322,
        0.04681355499062801,
        0.0485643304066732,
        0.05015713930589954,
        0.051583253952048456,
        0.05283494679011652,
        0.05390549933526606,
        0.054789210527962866,
        0.05548140435655936,
        0.05597843651047632,
        0.0562776998312543,
        0.056377628360384714,
        0.0562776998312543,
        0.05597843651047632,
        0.05548140435655936,
        0.054789210527962866,
        0.05390549933526606,
        0.05283494679011652,
        0.051583253952048456,
        0.05015713930589954,
        0.0485643304066732,
        0.04681355499062801,
        0.0449145316536322,
        0.04287796002500773,
        0.04071551011694432,
        0.03843981024945553,
        0.03606443278078257,
        0.03360387714820773,
        0.031073551111687966,
        0.02848975474583355,
        0.025869679327214748,
        0.02323144663991027,
        0.02059423391591271,
        0.01797855156812827,
        0.015406750466559498,
        0.012903800100351265,
        0.010498246909621322,
        0.00822300795723593,
        0.006115506822117246,
        0.004217630441558855,
        0.0025790497946856883,
        0.001265156556230068,
        0.00036322148184553065,
    ),
    (
        5.053609520786252e-05,
        0.00018073956444538837,
        0.00037774664632698465,
        0.0006326073193626335,
        0.0009383698485423815,
        0.0012895240826104174,
        0.00168114286542147,
        0.002108815245726633,
        0.0025687649437940202,
        0.003057753410175531,
        0.0035728927835172995,
        0.004111503978654693,
        0.0046710503721143215,
        0.0052491234548088595,
        0.00584344987583564,
        0.006451900050175737,
        0.007072489995433555,
        0.007703375233279742,
        0.008342838753968157,
        0.008989275784064136,
        0.009641177729702537,
        0.010297116957956355,
        0.010955733387837901,
        0.011615723319955135,
        0.01227583056008277,
        0.012934839663607374,
        0.013591571009765546,
        0.014244877372916775,
        0.014893641664815181,
        0.015536775555843983,
        0.01617321872957772,
        0.016801938574103864,
        0.017421930159464173,
        0.018032216390391285,
        0.01863184825613879,
        0.019219905124727765,
        0.019795495048097498,
        0.02035775505847216,
        0.020905851445812022,
        0.021438980012503866,
        0.021956366305317825,
        0.0224572658268161,
        0.02294096422938775,
        0.023406777495314005,
        0.02385405210603854,
        0.0242821652033366,
        0.024690524744487678,
        0.02507856965294977,
        0.025445769965464767,
        0.025791626976024228,
        0.0261156733767061,
        0.02641747339505826,
        0.02669662292745036,
        0.02695274966763303,
        0.027185513229624793,
        0.027394605263981433,
        0.027579749566481872,
        0.02774070217827968,
        0.027877251476613702,
        0.02798921825523816,
        0.028076455793817248,
        0.02813884991562715,
        0.0281763190330166,
        0.028188814180192357,
        0.0281763190330166,
        0.02813884991562715,
        0.028076455793817248,
        0.02798921825523816,
        0.027877251476613702,
        0.02774070217827968,
        0.027579749566481872,
        0.027394605263981433,
        0.027185513229624793,
        0.02695274966763303,
        0.02669662292745036,
        0.02641747339505826,
        0.0261156733767061,
        0.025791626976024228,
        0.025445769965464767,
        0.02507856965294977,
        0.024690524744487678,
        0.0242821652033366,
        0.02385405210603854,
        0.023406777495314005,
        0.02294096422938775,
        0.0224572658268161,
        0.021956366305317825,
        0.021438980012503866,
        0.020905851445812022,
        0.02035775505847216,
        0.019795495048097498,
        0.019219905124727765,
        0.01863184825613879,
        0.018032216390391285,
        0.017421930159464173,
        0.016801938574103864,
        0.01617321872957772,
        0.015536775555843983,
        0.014893641664815181,
        0.014244877372916775,
        0.013591571009765546,
        0.012934839663607374,
        0.01227583056008277,
        0.011615723319955135,
        0.010955733387837901,
        0.010297116957956355,
        0.009641177729702537,
        0.008989275784064136,
        0.008342838753968157,
        0.007703375233279742,
        0.007072489995433555,
        0.006451900050175737,
        0.00584344987583564,
        0.0052491234548088595,
        0.0046710503721143215,
        0.004111503978654693,
        0.0035728927835172995,
        0.003057753410175531,
        0.0025687649437940202,
        0.002108815245726633,
        0.00168114286542147,
        0.0012895240826104174,
        0.0009383698485423815,
        0.0006326073193626335,
        0.00037774664632698465,
        0.00018073956444538837,
        5.053609520786252e-05,
    ),
    (
        6.937936432410826e-06,
        2.515787038428066e-05,
        5.327529366978061e-05,
        9.037273465875115e-05,
        0.00013575491094922873,
        0.0001888732645065049,
        0.0002492124004829973,
        0.00031630366082226446,
        0.00038974528447328227,
        0.0004691849242478504,
        0.0005542953149303748,
        0.0006447620413057248,
        0.0007402828042445033,
        0.0008405714327107224,
        0.0009453615168585254,
        0.0010544076228633167,
        0.0011674841174299593,
        0.0012843824718970101,
        0.0014049079956551446,
        0.0015288767050877655,
        0.0016561127281544527,
        0.0017864463917586497,
        0.0019197129710138725,
        0.0020557519893273464,
        0.002194406925363839,
        0.0023355251860571608,
        0.002478958226657568,
        0.0026245617274044297,
        0.002772195764593451,
        0.00292172493791782,
        0.0030730184347025785,
        0.0032259500250878684,
        0.0033803979910869203,
        0.0035362449977167777,
        0.003693377917025651,
        0.003851687616639871,
        0.0040110687240750235,
        0.0041714193769840785,
        0.004332640968092983,
        0.004494637892032068,
        0.004657317299756855,
        0.0048205888648512685,
        0.004984364564765539,
        0.0051485584789781776,
        0.005313086605187057,
        0.005477866693918951,
        0.005642818101384444,
        0.0058078616599775675,
        0.005972919565508166,
        0.006137915280041385,
        0.006302773449085758,
        0.006467419831803687,
        0.006631781242901888,
        0.006795785504882773,
        0.006959361409390423,
        0.0071224386864583876,
        0.007284947980553807,
        0.007446820832407591,
        0.007607989665719056,
        0.0077683877779219914,
        0.007927949334294849,
        0.00808660936478886,
        0.008244303763032867,
        0.008400969287051932,
        0.00855654356130769,
        0.008710965079732087,
        0.008864173209482495,
        0.009016108195195643,
        0.00916671116356079,
        0.009315924128069395,
        0.009463689993830066,
        0.009609952562363883,
        0.009754656536317411,
        0.009897747524048749,
        0.01003917204405684,
        0.01017887752923608,
        0.010316812330947622,
        0.010452925722906011,
        0.010587167904885198,
        0.010719490006251933,
        0.010849844089337314,
        0.010978183152658912,
        0.011104461134006927,
        0.01122863291340805,
        0.011350654315980596,
        0.011470482114693875,
        0.011588074033043953,
        0.011703388747657003,
        0.011816385890830236,
        0.01192702605301927,
        0.012035270785279563,
        0.0121410826016683,
        0.012244424981611986,
        0.012345262372243839,
        0.012443560190714036,
        0.012539284826474885,
        0.01263240364354208,
        0.012722884982732384,
        0.012810698163877362,
        0.012895813488012114,
        0.0129782022395374,
        0.01305783668835305,
        0.013134690091960152,
        0.01320873669752913,
        0.01327995174393053,
        0.01334831146372518,
        0.013413793085110098,
        0.013476374833816515,
        0.013536035934956213,
        0.013592756614812396,
        0.013646518102571292,
        0.013697302631990716,
        0.013745093443001897,
        0.013789874783240936,
        0.013831631909506429,
        0.01387035108913984,
        0.013906019601325462,
        0.013938625738306851,
        0.013968158806516938,
        0.01399460912761908,
        0.014017968039456609,
        0.014038227896908624,
        0.014055382072649964,
        0.014069424957813575,
        0.014080351962553661,
        0.0140881595165083,
        0.014092845069160408,
        0.014094407090096179,
        0.014092845069160408,
        0.0140881595165083,
        0.014080351962553661,
        0.014069424957813575,
        0.014055382072649964,
        0.014038227896908624,
        0.014017968039456609,
        0.01399460912761908,
        0.013968158806516938,
        0.013938625738306851,
        0.013906019601325462,
        0.01387035108913984,
        0.013831631909506429,
        0.013789874783240936,
        0.013745093443001897,
        0.013697302631990716,
        0.013646518102571292,
        0.013592756614812396,
        0.013536035934956213,
        0.013476374833816515,
        0.013413793085110098,
        0.01334831146372518,
        0.01327995174393053,
        0.01320873669752913,
        0.013134690091960152,
        0.01305783668835305,
        0.0129782022395374,
        0.012895813488012114,
        0.012810698163877362,
        0.012722884982732384,
        0.01263240364354208,
        0.012539284826474885,
        0.012443560190714036,
        0.012345262372243839,
        0.012244424981611986,
        0.0121410826016683,
        0.012035270785279563,
        0.01192702605301927,
        0.011816385890830236,
        0.011703388747657003,
        0.011588074033043953,
        0.011470482114693875,
        0.011350654315980596,
        0.01122863291340805,
        0.011104461134006927,
        0.010978183152658912,
        0.010849844089337314,
        0.010719490006251933,
        0.010587167904885198,
        0.010452925722906011,
        0.010316812330947622,
        0.01017887752923608,
        0.01003917204405684,
        0.009897747524048749,
        0.009754656536317411,
        0.009609952562363883,
        0.009463689993830066,
        0.009315924128069395,
        0.00916671116356079,
        0.009016108195195643,
        0.008864173209482495,
        0.008710965079732087,
        0.00855654356130769,
        0.008400969287051932,
        0.008244303763032867,
        0.00808660936478886,
        0.007927949334294849,
        0.0077683877779219914,
        0.007607989665719056,
        0.007446820832407591,
        0.007284947980553807,
        0.0071224386864583876,
        0.006959361409390423,
        0.006795785504882773,
        0.006631781242901888,
        0.006467419831803687,
        0.006302773449085758,
        0.006137915280041385,
        0.005972919565508166,
        0.0058078616599775675,
        0.005642818101384444,
        0.005477866693918951,
        0.005313086605187057,
        0.0051485584789781776,
        0.004984364564765539,
        0.0048205888648512685,
        0.004657317299756855,
        0.004494637892032068,
        0.004332640968092983,
        0.0041714193769840785,
        0.0040110687240750235,
        0.003851687616639871,
        0.003693377917025651,
        0.0035362449977167777,
        0.0033803979910869203,
        0.0032259500250878684,
        0.0030730184347025785,
        0.00292172493791782,
        0.002772195764593451,
        0.0026245617274044297,
        0.002478958226657568,
        0.0023355251860571608,
        0.002194406925363839,
        0.0020557519893273464,
        0.0019197129710138725,
        0.0017864463917586497,
        0.0016561127281544527,
        0.0015288767050877655,
        0.0014049079956551446,
        0.0012843824718970101,
        0.0011674841174299593,
        0.0010544076228633167,
        0.0009453615168585254,
        0.0008405714327107224,
        0.0007402828042445033,
        0.0006447620413057248,
        0.0005542953149303748,
        0.0004691849242478504,
        0.00038974528447328227,
        0.00031630366082226446,
        0.0002492124004829973,
        0.0001888732645065049,
        0.00013575491094922873,
        9.037273465875115e-05,
        5.327529366978061e-05,
        2.515787038428066e-05,
        6.937936432410826e-06,
    ),
)
